#include "cli.hpp"

#include "reldisp/bootstrap.hpp"
#include "reldisp/coefficients.hpp"
#include "reldisp/datasets.hpp"
#include "reldisp/demos.hpp"
#include "reldisp/errors.hpp"
#include "reldisp/histogram.hpp"
#include "reldisp/io.hpp"
#include "reldisp/kde.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>

namespace reldisp::cli {

namespace {

using nlohmann::json;

enum class Format
{
  Json,
  Csv,
  Svg
};

struct Options
{
  std::string input = "-";
  Format format = Format::Json;
  std::string svg_path;
  std::optional<std::uint64_t> seed;
  bool log_y = false;

  // hist / polygon bins
  std::optional<std::size_t> bins;
  std::optional<double> origin;
  std::optional<double> width;
  bool right_closed = false;
  bool polygon = false;

  // density
  std::string kernel = "gaussian";
  std::string bw = "nrd0";
  std::size_t grid = 512;
  double cut = 3.0;

  // band
  std::string curve = "density";
  std::size_t replicates = 2000;
  double confidence = 0.95;
  bool reuse_bandwidth = false;
  unsigned threads = 0;

  std::string demo;
};

class UsageFailure : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

Sample
read_input(const Options& o, std::istream& in)
{
  if (o.input == "-")
    return io::parse_sample(in);
  std::ifstream file(o.input);
  if (!file)
    throw InvalidSampleError("cannot open input file '" + o.input + "'");
  return io::parse_sample(file);
}

std::uint64_t
resolve_seed(const Options& o, std::uint64_t fallback)
{
  if (o.seed)
    return *o.seed;
  if (const char* env = std::getenv(seed_env)) {
    try {
      std::size_t used = 0;
      const auto v = std::stoull(env, &used);
      if (used == std::string(env).size())
        return v;
    } catch (const std::exception&) {
    }
    throw UsageFailure(std::string(seed_env) + " is not an unsigned integer");
  }
  return fallback;
}

void
require_format(const Options& o, std::initializer_list<Format> allowed, const char* cmd)
{
  for (auto f : allowed)
    if (f == o.format)
      return;
  throw UsageFailure(std::string("output format not supported by '") + cmd + "'");
}

void
write_svg_file(const Options& o, const std::string& svg)
{
  if (o.svg_path.empty())
    return;
  std::ofstream f(o.svg_path);
  if (!f)
    throw UsageFailure("cannot write SVG file '" + o.svg_path + "'");
  f << svg;
}

Closedness
closedness(const Options& o)
{
  return o.right_closed ? Closedness::RightClosed : Closedness::LeftClosed;
}

BinSpec
bin_spec(const Options& o, const Sample& x)
{
  if (o.origin || o.width) {
    if (!o.origin || !o.width)
      throw UsageFailure("--origin and --width must be given together");
    if (o.bins)
      throw UsageFailure("--bins cannot be combined with --origin/--width");
    return BinSpec::covering(x, *o.origin, *o.width, closedness(o));
  }
  return BinSpec::nice(x, o.bins ? *o.bins : sturges_k(x.size()), closedness(o));
}

KernelKind
parse_kernel(const Options& o)
{
  try {
    return kernel_from_name(o.kernel);
  } catch (const DomainError& e) {
    throw UsageFailure(e.what());
  }
}

BandwidthRule
parse_rule(const Options& o)
{
  try {
    return bandwidth_rule_from_name(o.bw);
  } catch (const DomainError& e) {
    throw UsageFailure(e.what());
  }
}

io::SvgOptions
svg_options(const Options& o, std::string title)
{
  io::SvgOptions s;
  s.log_y = o.log_y;
  s.title = std::move(title);
  return s;
}

void
cmd_describe(const Options& o, std::istream& in, std::ostream& out)
{
  require_format(o, { Format::Json, Format::Csv }, "describe");
  const auto s = summarize(read_input(o, in));
  if (o.format == Format::Csv)
    out << io::to_csv(s);
  else
    out << io::to_json(s).dump(2) << '\n';
}

void
cmd_coeff(const Options& o, std::istream& in, std::ostream& out)
{
  require_format(o, { Format::Json, Format::Csv }, "coeff");
  const auto r = dispersion_report(read_input(o, in));
  if (o.format == Format::Csv)
    out << io::to_csv(r);
  else
    out << io::to_json(r).dump(2) << '\n';
}

void
cmd_hist(const Options& o, std::istream& in, std::ostream& out)
{
  const Sample x = read_input(o, in);
  const Histogram h = build_histogram(x, bin_spec(o, x));
  const std::string svg = io::svg_histogram(h, svg_options(o, "histogram"));
  write_svg_file(o, svg);
  switch (o.format) {
    case Format::Svg:
      out << svg;
      break;
    case Format::Csv:
      out << io::to_csv(h);
      break;
    case Format::Json: {
      json j = io::to_json(h);
      if (o.polygon)
        j["polygon"] = io::to_json(frequency_polygon(h));
      out << j.dump(2) << '\n';
    }
  }
}

void
cmd_density(const Options& o, std::istream& in, std::ostream& out)
{
  const KernelKind kernel = parse_kernel(o);
  const BandwidthRule rule = parse_rule(o);
  const Sample x = read_input(o, in);
  const auto d = estimate_density(x, kernel, rule, { o.grid, o.cut });
  const std::string svg = io::svg_density(d, svg_options(o, "density"));
  write_svg_file(o, svg);
  switch (o.format) {
    case Format::Svg:
      out << svg;
      break;
    case Format::Csv:
      out << io::to_csv(d);
      break;
    case Format::Json:
      out << io::to_json(d).dump(2) << '\n';
  }
}

void
cmd_band(const Options& o, std::istream& in, std::ostream& out)
{
  BootstrapConfig cfg;
  cfg.replicates = o.replicates;
  cfg.confidence = o.confidence;
  cfg.seed = resolve_seed(o, datasets::default_bootstrap_seed);
  cfg.grid_points = o.grid;
  cfg.cut = o.cut;
  cfg.threads = o.threads;
  if (o.curve == "density") {
    cfg.curve = DensityCurve{ parse_kernel(o), parse_rule(o), !o.reuse_bandwidth };
  } else if (o.curve != "polygon") {
    throw UsageFailure("--curve must be density or polygon");
  }
  // flags are checked before reading data; polygon bins depend on the data
  cfg.validate();

  const Sample x = read_input(o, in);
  if (o.curve == "polygon")
    cfg.curve = PolygonCurve{ bin_spec(o, x) };

  const Band b = band(x, cfg);
  const std::string svg = io::svg_band(b, svg_options(o, "bootstrap HDI band"));
  write_svg_file(o, svg);
  switch (o.format) {
    case Format::Svg:
      out << svg;
      break;
    case Format::Csv:
      out << io::to_csv(b);
      break;
    case Format::Json: {
      json j = io::to_json(b);
      j["replicates"] = cfg.replicates;
      j["confidence"] = cfg.confidence;
      j["seed"] = cfg.seed;
      j["curve"] = o.curve;
      out << j.dump(2) << '\n';
    }
  }
}

int
cmd_demo(const Options& o, std::ostream& out)
{
  require_format(o, { Format::Json, Format::Csv }, "demo");
  std::optional<std::uint64_t> seed = o.seed;
  if (!seed && std::getenv(seed_env))
    seed = resolve_seed(o, 0);
  const auto r = demos::run(o.demo, seed);
  if (o.format == Format::Csv) {
    out << "check,expected,computed,tolerance,pass,detail\n";
    for (const auto& c : r.checks)
      out << '"' << c.name << "\"," << (c.expected ? io::format_number(*c.expected) : "")
          << ',' << (c.computed ? io::format_number(*c.computed) : "") << ','
          << (c.expected ? io::format_number(c.tolerance) : "") << ','
          << (c.pass ? "true" : "false") << ",\"" << c.detail << "\"\n";
  } else {
    out << demos::to_json(r).dump(2) << '\n';
  }
  return r.passed() ? Success : ComputationError;
}

void
write_error(std::ostream& err, const std::string& code, const std::string& message,
            json extra = json::object())
{
  json j = { { "error", { { "code", code }, { "message", message } } } };
  for (auto& [k, v] : extra.items())
    j["error"][k] = v;
  err << j.dump() << '\n';
}

} // namespace

int
run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
    std::ostream& err)
{
  Options o;
  CLI::App app{ "Density estimation, histograms, relative dispersion and bootstrap bands" };
  app.require_subcommand(1, 1);

  const std::map<std::string, Format> formats{ { "json", Format::Json },
                                               { "csv", Format::Csv },
                                               { "svg", Format::Svg } };
  auto add_common = [&](CLI::App* sub, bool needs_input) {
    if (needs_input)
      sub->add_option("-i,--input", o.input, "input file, '-' for standard input");
    sub->add_option("-f,--format", o.format, "output format")
      ->transform(CLI::Validator(
        [&formats](std::string& value) -> std::string {
          std::string key = value;
          std::transform(key.begin(), key.end(), key.begin(),
                         [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
          const auto it = formats.find(key);
          if (it == formats.end())
            return "unknown format '" + value + "', expected json, csv or svg";
          value = std::to_string(static_cast<int>(it->second));
          return {};
        },
        "json|csv|svg"));
  };
  auto add_bins = [&](CLI::App* sub) {
    sub->add_option("--bins", o.bins, "target bin count (nice breaks)")
      ->check(CLI::PositiveNumber);
    sub->add_option("--origin", o.origin, "left edge of the first bin");
    sub->add_option("--width", o.width, "bin width")->check(CLI::PositiveNumber);
    sub->add_flag("--right-closed", o.right_closed, "use (a, b] bins");
  };
  auto add_density = [&](CLI::App* sub) {
    sub->add_option("--kernel", o.kernel, "smoothing kernel");
    sub->add_option("--bw", o.bw, "nrd0, nrd, ucv, bcv, sj or a positive bandwidth");
    sub->add_option("--grid", o.grid, "number of grid points")->check(CLI::Range(2, 1 << 24));
    sub->add_option("--cut", o.cut, "grid extension in bandwidths")->check(CLI::NonNegativeNumber);
  };
  auto add_svg = [&](CLI::App* sub) {
    sub->add_option("--svg", o.svg_path, "also write an SVG plot to this file");
    sub->add_flag("--log-y", o.log_y, "log10 y-axis in SVG output");
  };

  auto* describe = app.add_subcommand("describe", "summary statistics");
  add_common(describe, true);
  auto* coeff = app.add_subcommand("coeff", "CV, CV_c, CRD and CRD_c");
  add_common(coeff, true);
  auto* hist = app.add_subcommand("hist", "histogram");
  add_common(hist, true);
  add_bins(hist);
  add_svg(hist);
  hist->add_flag("--polygon", o.polygon, "include the frequency polygon (JSON)");
  auto* density = app.add_subcommand("density", "kernel density estimate");
  add_common(density, true);
  add_density(density);
  add_svg(density);
  auto* bandcmd = app.add_subcommand("band", "bootstrap HDI band");
  add_common(bandcmd, true);
  add_density(bandcmd);
  add_bins(bandcmd);
  add_svg(bandcmd);
  bandcmd->add_option("--curve", o.curve, "density or polygon")
    ->check(CLI::IsMember({ "density", "polygon" }));
  bandcmd->add_option("-B,--B,--replicates", o.replicates, "number of resamplings")
    ->check(CLI::Range(std::size_t{ 2 }, std::numeric_limits<std::size_t>::max()));
  bandcmd->add_option("--confidence", o.confidence, "HDI mass")
    ->check(CLI::Range(0.0, 1.0));
  bandcmd->add_option("--seed", o.seed, "random seed");
  bandcmd->add_option("--threads", o.threads, "worker threads (0: all cores)");
  bandcmd->add_flag("--reuse-bandwidth", o.reuse_bandwidth,
                    "keep the original bandwidth for every replicate");
  auto* demo = app.add_subcommand("demo", "reproduce a worked example");
  add_common(demo, false);
  std::vector<std::string> demo_names;
  for (auto n : demos::names())
    demo_names.emplace_back(n);
  demo->add_option("name", o.demo, "example name")->required()->check(CLI::IsMember(demo_names));
  demo->add_option("--seed", o.seed, "seed for synthetic data");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return Success;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return Success;
  } catch (const CLI::ParseError& e) {
    write_error(err, "usage_error", e.what());
    return UsageError;
  }

  try {
    if (*describe)
      cmd_describe(o, in, out);
    else if (*coeff)
      cmd_coeff(o, in, out);
    else if (*hist)
      cmd_hist(o, in, out);
    else if (*density)
      cmd_density(o, in, out);
    else if (*bandcmd)
      cmd_band(o, in, out);
    else if (*demo)
      return cmd_demo(o, out);
    return Success;
  } catch (const UsageFailure& e) {
    write_error(err, "usage_error", e.what());
    return UsageError;
  } catch (const ParseError& e) {
    write_error(err, e.code(), e.what(), { { "line", e.line() }, { "column", e.column() } });
    return DataError;
  } catch (const CoverageError& e) {
    write_error(err, e.code(), e.what(), { { "value", e.value() } });
    return DataError;
  } catch (const NoMinimumError& e) {
    write_error(err, e.code(), e.what(), { { "lower", e.lower() }, { "upper", e.upper() } });
    return ComputationError;
  } catch (const Error& e) {
    write_error(err, e.code(), e.what());
    switch (e.category()) {
      case Error::Category::Data:
        return DataError;
      case Error::Category::Config:
        return UsageError;
      case Error::Category::Computation:
        return ComputationError;
    }
    return ComputationError;
  } catch (const std::exception& e) {
    write_error(err, "internal_error", e.what());
    return ComputationError;
  }
}

} // namespace reldisp::cli
