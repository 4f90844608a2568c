#pragma once

#include "reldisp/core_stats.hpp"

#include <optional>
#include <string>

namespace reldisp {

/// Pearson's coefficient of variation s / mean. Signed when the mean is
/// negative. Throws UndefinedCoefficientError when the mean is zero.
double cv(const SummaryStats& stats);

/// Kirby's sample-size correction (s / mean) / sqrt(n - 1). Not clamped.
double cv_corrected(const SummaryStats& stats);

/// Eisenhauer's coefficient of relative dispersion s / (r / 2).
/// Requires n >= 2 and a positive range.
double crd(const SummaryStats& stats);

/// CRD rescaled from its bounds [sqrt(2/(n-1)), sqrt(n/(n-1))] onto [0, 1].
/// Requires n >= 3: at n = 2 both bounds coincide.
double crd_corrected(const SummaryStats& stats);

/// Theoretical bounds of CRD for a sample of size n >= 2.
struct CrdBounds
{
  double lower;
  double upper;
};
CrdBounds crd_bounds(std::size_t n);

/// Upper bound of CV for nonnegative data under the n - 1 standard
/// deviation used here: sqrt(n), attained by one positive value among zeros.
/// (The familiar sqrt(n - 1) holds for the population standard deviation.)
/// Consequently cv_corrected can exceed 1, by at most sqrt(n / (n - 1)).
double cv_upper_bound(std::size_t n);

//! One slot of a DispersionReport: either a value, or the machine-readable
//! code of the error that made the coefficient undefined.
struct CoefficientSlot
{
  std::optional<double> value;
  std::string absent_reason; // empty when value is present
  bool out_of_unit_range = false;

  bool present() const noexcept { return value.has_value(); }
};

struct DispersionReport
{
  std::size_t n = 0;
  CoefficientSlot cv;
  CoefficientSlot cv_corrected;
  CoefficientSlot crd;
  CoefficientSlot crd_corrected;
};

/// Computes all four coefficients. Never throws on a valid Sample; each
/// coefficient whose preconditions fail is reported absent.
DispersionReport dispersion_report(const Sample& sample);
DispersionReport dispersion_report(const SummaryStats& stats);

} // namespace reldisp
