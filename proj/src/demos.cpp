#include "reldisp/demos.hpp"

#include "reldisp/coefficients.hpp"
#include "reldisp/datasets.hpp"
#include "reldisp/errors.hpp"
#include "reldisp/histogram.hpp"
#include "reldisp/io.hpp"
#include "reldisp/kde.hpp"

#include <algorithm>
#include <cmath>

namespace reldisp::demos {

using nlohmann::json;

namespace {

Check
numeric(std::string name, double expected, double computed, double tol)
{
  Check c;
  c.name = std::move(name);
  c.expected = expected;
  c.computed = computed;
  c.tolerance = tol;
  c.pass = std::abs(expected - computed) <= tol;
  return c;
}

Check
claim(std::string name, bool pass, std::string detail)
{
  Check c;
  c.name = std::move(name);
  c.pass = pass;
  c.detail = std::move(detail);
  return c;
}

std::vector<std::size_t>
nonempty(const std::vector<std::size_t>& counts)
{
  std::vector<std::size_t> out;
  std::copy_if(counts.begin(), counts.end(), std::back_inserter(out),
               [](std::size_t c) { return c > 0; });
  return out;
}

DemoResult
temperatures()
{
  DemoResult r{ "temperatures", {}, {} };
  const Sample c = datasets::celsius();
  const Sample f = convert_c_to_f(c);
  const Sample printed = datasets::fahrenheit_printed();

  double conversion_err = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i)
    conversion_err = std::max(conversion_err, std::abs(f[i] - printed[i]));
  r.checks.push_back(numeric("max |F - printed F|", 0.0, conversion_err, 1e-9));

  const auto sc = summarize(c);
  const auto sf = summarize(f);
  r.checks.push_back(numeric("CV Celsius", 0.422, cv(sc), 0.001));
  r.checks.push_back(numeric("CV Fahrenheit", 0.161, cv(sf), 0.001));
  r.checks.push_back(numeric("CRD Celsius", 0.722, crd(sc), 0.001));
  r.checks.push_back(numeric("CRD Fahrenheit", 0.722, crd(sf), 0.001));

  const Sample zc = standardize(c);
  const Sample zf = standardize(f);
  double z_err = 0.0;
  for (std::size_t i = 0; i < zc.size(); ++i)
    z_err = std::max(z_err, std::abs(zc[i] - zf[i]));
  r.checks.push_back(numeric("max |z_C - z_F|", 0.0, z_err, 1e-12));

  r.payload = { { "celsius", io::to_json(dispersion_report(c)) },
                { "fahrenheit", io::to_json(dispersion_report(f)) },
                { "z_celsius", std::vector<double>(zc.begin(), zc.end()) },
                { "z_fahrenheit", std::vector<double>(zf.begin(), zf.end()) } };
  return r;
}

DemoResult
targets()
{
  DemoResult r{ "targets", {}, {} };
  const std::pair<const char*, Sample> sets[] = {
    { "A", datasets::target_a() },
    { "B", datasets::target_b() },
    { "C", datasets::target_c() },
    { "D", datasets::target_d() },
  };
  const double golden_mean[] = { 7, 5, 21, 19 };
  const double golden_sd[] = { 4.58, 4.58, 13.75, 13.75 };
  const double golden_cvc[] = { 0.46, 0.65, 0.46, 0.51 };

  for (std::size_t i = 0; i < 4; ++i) {
    const auto& [label, sample] = sets[i];
    const auto s = summarize(sample);
    const std::string tag(label);
    r.checks.push_back(numeric("mean " + tag, golden_mean[i], s.mean, 0.005));
    r.checks.push_back(numeric("sd " + tag, golden_sd[i], s.sd, 0.005));
    r.checks.push_back(numeric("CV_c " + tag, golden_cvc[i], cv_corrected(s), 0.005));
    r.checks.push_back(numeric("CRD_c " + tag, 0.08, crd_corrected(s), 0.005));
    r.payload[tag] = io::to_json(dispersion_report(s));
  }
  return r;
}

DemoResult
stature()
{
  DemoResult r{ "stature", {}, {} };
  const Sample h = datasets::stature();
  const Histogram hist = build_histogram(h, { 160.0, 10.0, 3, Closedness::LeftClosed });
  const double golden_rel[] = { 0.286, 0.428, 0.286 };
  const std::size_t golden_counts[] = { 2, 3, 2 };
  for (std::size_t i = 0; i < 3; ++i) {
    r.checks.push_back(numeric("count bin " + std::to_string(i + 1),
                               static_cast<double>(golden_counts[i]),
                               static_cast<double>(hist.counts[i]), 0.0));
    r.checks.push_back(
      numeric("relative bin " + std::to_string(i + 1), golden_rel[i], hist.relative[i], 0.001));
  }
  r.payload = { { "histogram", io::to_json(hist) },
                { "polygon", io::to_json(frequency_polygon(hist)) } };
  return r;
}

DemoResult
behrens()
{
  DemoResult r{ "behrens", {}, {} };
  const Sample x = datasets::behrens();
  const auto s = summarize(x);
  r.checks.push_back(numeric("mean", 6.0, s.mean, 1e-12));

  auto counts = [&](double origin, double width) {
    return build_histogram(x, BinSpec::covering(x, origin, width, Closedness::RightClosed))
      .counts;
  };
  const auto b = counts(-1.5, 1.5);
  const auto c = counts(-0.5, 1.5);
  const auto d = counts(-2.0, 2.0);
  const auto e = counts(-2.0, 1.9);

  auto flipped = nonempty(b);
  std::reverse(flipped.begin(), flipped.end());
  r.checks.push_back(claim("origins -1.5 / -0.5 (width 1.5) are horizontal flips",
                           flipped == nonempty(c), "nonempty right-closed counts reversed"));
  r.checks.push_back(claim("widths 2.0 / 1.9 (origin -2) differ", d != e,
                           "right-closed count vectors compared"));

  const auto est = estimate_density(x, KernelKind::Gaussian, { BandwidthRule::Kind::Nrd0, 0.0 });
  const auto peak = std::max_element(est.y.begin(), est.y.end()) - est.y.begin();
  r.checks.push_back(numeric("density mode", 6.0, est.x[static_cast<std::size_t>(peak)],
                             0.1));

  r.payload = { { "origin_-1.5_width_1.5", b }, { "origin_-0.5_width_1.5", c },
                { "origin_-2_width_2", d },     { "origin_-2_width_1.9", e },
                { "density", io::to_json(est) } };
  return r;
}

DemoResult
bpm(std::uint64_t seed)
{
  DemoResult r{ "bpm", {}, {} };
  const Sample x = datasets::synthetic_bpm(seed);
  const std::size_t k = sturges_k(x.size());
  r.checks.push_back(numeric("Sturges k for n = 800", 11.0, static_cast<double>(k), 0.0));

  const Histogram def = build_histogram(x, BinSpec::nice(x, k));
  const auto empty =
    static_cast<std::size_t>(std::count(def.counts.begin(), def.counts.end(), 0u));
  r.checks.push_back(claim("default binning leaves empty bins", empty > 0,
                           std::to_string(def.bins()) + " bins, " +
                             std::to_string(empty) + " empty"));

  json panels = json::object();
  for (std::size_t bins : { 6, 7, 8, 9 }) {
    const auto s = summarize(x);
    const double width = s.range / static_cast<double>(bins);
    auto breaks = BinSpec{ s.min, width, bins, Closedness::LeftClosed }.breaks();
    breaks.back() = s.max;
    panels[std::to_string(bins)] =
      io::to_json(build_histogram(x.values(), breaks, Closedness::LeftClosed));
  }
  const auto est = estimate_density(x, KernelKind::Gaussian, { BandwidthRule::Kind::Nrd0, 0.0 });
  r.payload = { { "seed", seed },
                { "default_histogram", io::to_json(def) },
                { "equal_width_histograms", panels },
                { "density", io::to_json(est) } };
  return r;
}

DemoResult
heights(std::uint64_t seed)
{
  DemoResult r{ "heights", {}, {} };
  const Sample f = datasets::synthetic_heights_female(seed);
  const Sample m = datasets::synthetic_heights_male(seed);
  const auto rf = dispersion_report(f);
  const auto rm = dispersion_report(m);

  auto cmp = [&](const char* name, const CoefficientSlot& a, const CoefficientSlot& b,
                 bool female_greater) {
    const bool ok = a.present() && b.present() &&
                    (female_greater ? *a.value > *b.value : *a.value < *b.value);
    r.checks.push_back(claim(name, ok, female_greater ? "female > male" : "female < male"));
  };
  // CV, CRD and CV_c point the wrong way; only CRD_c ranks women higher
  cmp("CV suggests more relative variability for men", rf.cv, rm.cv, false);
  cmp("CRD suggests more relative variability for men", rf.crd, rm.crd, false);
  cmp("CV_c does not fix the ordering", rf.cv_corrected, rm.cv_corrected, false);
  cmp("CRD_c ranks women higher", rf.crd_corrected, rm.crd_corrected, true);

  r.payload = { { "seed", seed },
                { "female", io::to_json(rf) },
                { "male", io::to_json(rm) },
                { "female_values", std::vector<double>(f.begin(), f.end()) },
                { "male_values", std::vector<double>(m.begin(), m.end()) } };
  return r;
}

DemoResult
falls()
{
  DemoResult r{ "falls", {}, {} };
  SummaryStats female{ 10, 6.0, 2.83, 1.0, 11.0, 10.0 };
  SummaryStats male{ 10, 6.0, 2.83, 3.0, 9.0, 6.0 };
  r.checks.push_back(numeric("CV female = CV male", cv(female), cv(male), 0.0));
  r.checks.push_back(numeric("CRD female", 0.566, crd(female), 0.001));
  r.checks.push_back(numeric("CRD male", 0.943, crd(male), 0.001));
  r.payload = { { "female", io::to_json(female) }, { "male", io::to_json(male) } };
  return r;
}

} // namespace

bool
DemoResult::passed() const
{
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

std::vector<std::string_view>
names()
{
  return { "temperatures", "targets", "stature", "behrens", "bpm", "heights", "falls" };
}

DemoResult
run(std::string_view name, std::optional<std::uint64_t> seed)
{
  if (name == "temperatures")
    return temperatures();
  if (name == "targets")
    return targets();
  if (name == "stature")
    return stature();
  if (name == "behrens")
    return behrens();
  if (name == "bpm")
    return bpm(seed.value_or(datasets::default_bpm_seed));
  if (name == "heights")
    return heights(seed.value_or(datasets::default_heights_seed));
  if (name == "falls")
    return falls();
  throw DomainError("unknown demo '" + std::string(name) + "'");
}

json
to_json(const DemoResult& r)
{
  json checks = json::array();
  for (const auto& c : r.checks) {
    json j = { { "name", c.name }, { "pass", c.pass } };
    if (c.expected)
      j["expected"] = *c.expected;
    if (c.computed)
      j["computed"] = *c.computed;
    if (c.expected)
      j["tolerance"] = c.tolerance;
    if (!c.detail.empty())
      j["detail"] = c.detail;
    checks.push_back(j);
  }
  return { { "demo", r.name }, { "passed", r.passed() }, { "checks", checks },
           { "payload", r.payload } };
}

} // namespace reldisp::demos
