#pragma once

#include "reldisp/core_stats.hpp"

#include <cstddef>
#include <vector>

namespace reldisp {

enum class Closedness
{
  LeftClosed,  // [a, b)
  RightClosed  // (a, b]
};

//! Equal-width bins starting at origin. Breaks are origin + i * width.
struct BinSpec
{
  double origin = 0.0;
  double width = 1.0;
  std::size_t count = 1;
  Closedness closedness = Closedness::LeftClosed;

  double upper() const noexcept
  {
    return origin + static_cast<double>(count) * width;
  }
  std::vector<double> breaks() const;

  //! Smallest bin count from `origin` that covers every sample value.
  static BinSpec covering(const Sample& sample, double origin, double width,
                          Closedness closedness = Closedness::LeftClosed);

  //! Spec whose breaks are `nice_breaks(min, max, k)`.
  static BinSpec nice(const Sample& sample, std::size_t k,
                      Closedness closedness = Closedness::LeftClosed);
};

struct Histogram
{
  std::vector<double> breaks;  // count + 1 entries
  std::vector<std::size_t> counts;
  std::vector<double> relative;
  std::vector<double> density; // relative / width
  Closedness closedness = Closedness::LeftClosed;

  std::size_t bins() const noexcept { return counts.size(); }
  std::size_t total() const noexcept;
};

//! Frequency polygon: bin midpoints paired with bin densities.
struct Polyline
{
  std::vector<double> x;
  std::vector<double> y;
};

/// Sturges' bin count ceil(log2 n) + 1. Throws DomainError for n == 0.
std::size_t sturges_k(std::size_t n);

/// Breaks at integer multiples of a width w in {1, 2, 2.5, 5} x 10^j, with
/// the bin count closest to k while covering [lo, hi]. Ties go to the grid
/// that overhangs [lo, hi] least, then to the wider bins.
std::vector<double> nice_breaks(double lo, double hi, std::size_t k);

/// Assigns each value to its bin. The terminal boundary (the last break for
/// LeftClosed, the first for RightClosed) is included so that no value is
/// dropped. Throws CoverageError for values outside [origin, upper].
Histogram build_histogram(const Sample& sample, const BinSpec& spec);

/// Counts against arbitrary sorted breaks (used by the bootstrap, which
/// re-counts replicates against the breaks of the original sample).
Histogram build_histogram(std::span<const double> values,
                          const std::vector<double>& breaks,
                          Closedness closedness);

Polyline frequency_polygon(const Histogram& hist);

} // namespace reldisp
