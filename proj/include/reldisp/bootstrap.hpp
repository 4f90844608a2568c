#pragma once

#include "reldisp/core_stats.hpp"
#include "reldisp/histogram.hpp"
#include "reldisp/kde.hpp"
#include "reldisp/random.hpp"

#include <cstdint>
#include <span>
#include <utility>
#include <variant>
#include <vector>

namespace reldisp {

//! Bootstrap a kernel density curve. The bandwidth is re-selected on every
//! replicate unless `reselect_bandwidth` is off, in which case the original
//! sample's bandwidth is reused.
struct DensityCurve
{
  KernelKind kernel = KernelKind::Gaussian;
  BandwidthRule rule{};
  bool reselect_bandwidth = true;
};

//! Bootstrap a frequency polygon over fixed bins.
struct PolygonCurve
{
  BinSpec bins;
};

using CurveKind = std::variant<DensityCurve, PolygonCurve>;

struct BootstrapConfig
{
  std::size_t replicates = 2000;
  double confidence = 0.95;
  std::uint64_t seed = 0;
  std::size_t grid_points = 512; // density curves only
  double cut = 3.0;              // density curves only
  CurveKind curve = DensityCurve{};
  unsigned threads = 0;          // 0: one per hardware thread

  //! Throws ConfigError.
  void validate() const;
};

struct Band
{
  std::vector<double> x;
  std::vector<double> lower;
  std::vector<double> median;
  std::vector<double> upper;
  std::vector<double> original; // curve of the original sample on x
};

//! Every replicate curve evaluated on the common grid, row-major
//! (replicate r occupies values[r * x.size() .. (r + 1) * x.size())).
struct ReplicateSet
{
  std::vector<double> x;
  std::vector<double> original;
  std::vector<double> values;
  std::size_t replicates = 0;

  std::span<const double> row(std::size_t r) const
  {
    return std::span<const double>(values).subspan(r * x.size(), x.size());
  }
};

/// Draws n values with replacement.
Sample resample(const Sample& sample, Rng& rng);

/// Shortest window of ceil(confidence * B) consecutive sorted values;
/// ties resolve to the leftmost window.
std::pair<double, double> hdi(std::span<const double> sorted, double confidence);

/// Median of values already sorted ascending.
double median_sorted(std::span<const double> sorted);

/// Evaluates the configured curve on the original sample and on
/// config.replicates resamples of it. Replicate r draws from stream r of
/// the seed, so the result does not depend on the thread count.
ReplicateSet bootstrap_replicates(const Sample& sample, const BootstrapConfig& config);

/// Pointwise HDI and median over the replicates.
Band summarize_band(const ReplicateSet& replicates, double confidence);

Band band(const Sample& sample, const BootstrapConfig& config);

} // namespace reldisp
