#include "reldisp/coefficients.hpp"

#include "reldisp/errors.hpp"

#include <cmath>

namespace reldisp {

namespace {

void
require_nonzero_mean(const SummaryStats& stats)
{
  if (stats.mean == 0.0)
    throw UndefinedCoefficientError(
      "coefficient of variation is undefined for a zero mean");
}

void
require_positive_range(const SummaryStats& stats)
{
  if (!(stats.range > 0.0))
    throw DegenerateSampleError(
      "relative dispersion is undefined for constant data (zero range)");
}

template<typename F>
CoefficientSlot
fill_slot(F&& compute, bool unit_bounded)
{
  CoefficientSlot slot;
  try {
    const double v = compute();
    slot.value = v;
    if (unit_bounded)
      slot.out_of_unit_range = v < -1e-9 || v > 1.0 + 1e-9;
  } catch (const Error& e) {
    slot.absent_reason = e.code();
  }
  return slot;
}

} // namespace

double
cv(const SummaryStats& stats)
{
  require_nonzero_mean(stats);
  return stats.sd / stats.mean;
}

double
cv_corrected(const SummaryStats& stats)
{
  require_nonzero_mean(stats);
  if (stats.n < 2)
    throw InsufficientSampleError("corrected CV requires n >= 2");
  return (stats.sd / stats.mean) / std::sqrt(static_cast<double>(stats.n - 1));
}

double
crd(const SummaryStats& stats)
{
  if (stats.n < 2)
    throw InsufficientSampleError("CRD requires n >= 2");
  require_positive_range(stats);
  return stats.sd / (stats.range / 2.0);
}

CrdBounds
crd_bounds(std::size_t n)
{
  if (n < 2)
    throw InsufficientSampleError("CRD bounds require n >= 2");
  const double m = static_cast<double>(n - 1);
  return { std::sqrt(2.0 / m), std::sqrt(static_cast<double>(n) / m) };
}

double
cv_upper_bound(std::size_t n)
{
  if (n < 1)
    throw InsufficientSampleError("CV bound requires n >= 1");
  return std::sqrt(static_cast<double>(n));
}

double
crd_corrected(const SummaryStats& stats)
{
  if (stats.n < 3)
    throw InsufficientSampleError(
      "corrected CRD requires n >= 3 (its bounds coincide at n = 2)");
  require_positive_range(stats);
  const CrdBounds b = crd_bounds(stats.n);
  return (2.0 * stats.sd / stats.range - b.lower) / (b.upper - b.lower);
}

DispersionReport
dispersion_report(const SummaryStats& stats)
{
  DispersionReport r;
  r.n = stats.n;
  r.cv = fill_slot([&] { return cv(stats); }, false);
  r.cv_corrected = fill_slot([&] { return cv_corrected(stats); }, true);
  r.crd = fill_slot([&] { return crd(stats); }, false);
  r.crd_corrected = fill_slot([&] { return crd_corrected(stats); }, true);
  return r;
}

DispersionReport
dispersion_report(const Sample& sample)
{
  return dispersion_report(summarize(sample));
}

} // namespace reldisp
