#include "reldisp/bootstrap.hpp"

#include "reldisp/errors.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <thread>

namespace reldisp {

namespace {

std::size_t
window_size(std::size_t count, double confidence)
{
  // guard against confidence * count landing a hair above an integer
  const double raw = confidence * static_cast<double>(count);
  auto w = static_cast<std::size_t>(std::ceil(raw - 1e-9 * std::max(1.0, raw)));
  return std::clamp<std::size_t>(w, 1, count);
}

struct CurveEvaluator
{
  const Sample& original;
  const BootstrapConfig& config;
  std::vector<double> grid;
  std::vector<double> breaks;
  double original_h = 0.0;

  CurveEvaluator(const Sample& sample, const BootstrapConfig& cfg)
    : original(sample)
    , config(cfg)
  {
    if (auto* d = std::get_if<DensityCurve>(&config.curve)) {
      original_h = bandwidth(d->rule, original);
      grid = density_grid(original, original_h, { config.grid_points, config.cut });
    } else {
      const auto& p = std::get<PolygonCurve>(config.curve);
      if (!(p.bins.width > 0.0) || p.bins.count == 0)
        throw ConfigError("polygon bins need a positive width and count");
      breaks = p.bins.breaks();
      grid.resize(p.bins.count);
      for (std::size_t i = 0; i < p.bins.count; ++i)
        grid[i] = 0.5 * (breaks[i] + breaks[i + 1]);
    }
  }

  std::vector<double> operator()(const Sample& s) const
  {
    if (auto* d = std::get_if<DensityCurve>(&config.curve)) {
      const double h = d->reselect_bandwidth ? bandwidth(d->rule, s) : original_h;
      return evaluate_density(s.values(), d->kernel, h, grid);
    }
    const auto& p = std::get<PolygonCurve>(config.curve);
    return build_histogram(s.values(), breaks, p.bins.closedness).density;
  }
};

} // namespace

void
BootstrapConfig::validate() const
{
  if (replicates < 2)
    throw ConfigError("bootstrap needs at least 2 replicates");
  if (!(confidence > 0.0 && confidence < 1.0))
    throw ConfigError("confidence must lie strictly between 0 and 1");
  if (std::holds_alternative<DensityCurve>(curve)) {
    if (grid_points < 2)
      throw ConfigError("density grid needs at least 2 points");
    if (!(cut >= 0.0) || !std::isfinite(cut))
      throw ConfigError("cut must be nonnegative and finite");
  }
}

Sample
resample(const Sample& sample, Rng& rng)
{
  const auto n = sample.size();
  std::vector<double> out(n);
  for (auto& v : out)
    v = sample[static_cast<std::size_t>(rng.below(n))];
  return Sample(std::move(out));
}

std::pair<double, double>
hdi(std::span<const double> sorted, double confidence)
{
  if (sorted.empty())
    throw InvalidSampleError("HDI of an empty sequence");
  if (!(confidence > 0.0 && confidence < 1.0))
    throw DomainError("HDI confidence must lie strictly between 0 and 1");

  const std::size_t w = window_size(sorted.size(), confidence);
  std::size_t best = 0;
  double best_width = sorted[w - 1] - sorted[0];
  for (std::size_t s = 1; s + w <= sorted.size(); ++s) {
    const double width = sorted[s + w - 1] - sorted[s];
    if (width < best_width) {
      best_width = width;
      best = s;
    }
  }
  return { sorted[best], sorted[best + w - 1] };
}

double
median_sorted(std::span<const double> sorted)
{
  if (sorted.empty())
    throw InvalidSampleError("median of an empty sequence");
  const std::size_t n = sorted.size();
  if (n % 2 == 1)
    return sorted[n / 2];
  return 0.5 * (sorted[n / 2 - 1] + sorted[n / 2]);
}

ReplicateSet
bootstrap_replicates(const Sample& sample, const BootstrapConfig& config)
{
  config.validate();
  const CurveEvaluator curve(sample, config);

  ReplicateSet set;
  set.x = curve.grid;
  set.original = curve(sample);
  set.replicates = config.replicates;
  const std::size_t m = set.x.size();
  set.values.resize(config.replicates * m);

  const std::size_t hw = std::max(1u, std::thread::hardware_concurrency());
  const std::size_t workers =
    std::min<std::size_t>(config.threads ? config.threads : hw, config.replicates);
  std::vector<std::exception_ptr> failures(workers);

  auto work = [&](std::size_t worker) {
    try {
      const std::size_t begin = config.replicates * worker / workers;
      const std::size_t end = config.replicates * (worker + 1) / workers;
      for (std::size_t r = begin; r < end; ++r) {
        Rng rng = Rng::stream(config.seed, r);
        const auto y = curve(resample(sample, rng));
        std::copy(y.begin(), y.end(), set.values.begin() + static_cast<std::ptrdiff_t>(r * m));
      }
    } catch (...) {
      failures[worker] = std::current_exception();
    }
  };

  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t t = 0; t < workers; ++t)
      pool.emplace_back(work, t);
  }
  for (auto& f : failures)
    if (f)
      std::rethrow_exception(f);
  return set;
}

Band
summarize_band(const ReplicateSet& replicates, double confidence)
{
  if (!(confidence > 0.0 && confidence < 1.0))
    throw ConfigError("confidence must lie strictly between 0 and 1");
  if (replicates.replicates < 2)
    throw ConfigError("bootstrap needs at least 2 replicates");

  const std::size_t m = replicates.x.size();
  Band b;
  b.x = replicates.x;
  b.original = replicates.original;
  b.lower.resize(m);
  b.median.resize(m);
  b.upper.resize(m);

  std::vector<double> column(replicates.replicates);
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t r = 0; r < replicates.replicates; ++r)
      column[r] = replicates.values[r * m + j];
    std::sort(column.begin(), column.end());
    const auto [lo, hi] = hdi(column, confidence);
    const double med = median_sorted(column);
    // below 50% confidence the shortest window may exclude the median
    b.lower[j] = std::min(lo, med);
    b.median[j] = med;
    b.upper[j] = std::max(hi, med);
  }
  return b;
}

Band
band(const Sample& sample, const BootstrapConfig& config)
{
  return summarize_band(bootstrap_replicates(sample, config), config.confidence);
}

} // namespace reldisp
