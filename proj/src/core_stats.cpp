#include "reldisp/core_stats.hpp"

#include "reldisp/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace reldisp {

Sample::Sample(std::vector<double> values)
  : values_(std::move(values))
{
  if (values_.empty())
    throw InvalidSampleError("sample must contain at least one value");
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!std::isfinite(values_[i]))
      throw InvalidSampleError("sample value at index " + std::to_string(i) +
                               " is not finite");
  }
}

Sample::Sample(std::initializer_list<double> values)
  : Sample(std::vector<double>(values))
{}

std::vector<double>
Sample::sorted() const
{
  std::vector<double> out = values_;
  std::sort(out.begin(), out.end());
  return out;
}

SummaryStats
summarize(const Sample& sample)
{
  const auto x = sample.values();
  SummaryStats s;
  s.n = x.size();

  // two-pass mean/variance; the second pass removes most cancellation
  double sum = 0.0;
  for (double v : x)
    sum += v;
  double mean = sum / static_cast<double>(s.n);
  double correction = 0.0;
  for (double v : x)
    correction += v - mean;
  mean += correction / static_cast<double>(s.n);
  s.mean = mean;

  if (s.n > 1) {
    double ss = 0.0;
    for (double v : x)
      ss += (v - mean) * (v - mean);
    s.sd = std::sqrt(ss / static_cast<double>(s.n - 1));
  }

  auto [lo, hi] = std::minmax_element(x.begin(), x.end());
  s.min = *lo;
  s.max = *hi;
  s.range = s.max - s.min;
  // rounding can push the mean of a near-constant sample outside [min, max]
  s.mean = std::clamp(s.mean, s.min, s.max);
  return s;
}

double
quantile_sorted(std::span<const double> sorted, double p)
{
  if (!(p >= 0.0 && p <= 1.0))
    throw DomainError("quantile probability must lie in [0, 1]");
  if (sorted.empty())
    throw InvalidSampleError("quantile of an empty sequence");

  const double h = static_cast<double>(sorted.size() - 1) * p;
  const auto lo = static_cast<std::size_t>(std::floor(h));
  const double frac = h - static_cast<double>(lo);
  if (lo + 1 >= sorted.size())
    return sorted.back();
  return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

double
quantile(const Sample& sample, double p)
{
  if (!(p >= 0.0 && p <= 1.0))
    throw DomainError("quantile probability must lie in [0, 1]");
  return quantile_sorted(sample.sorted(), p);
}

Sample
standardize(const Sample& sample)
{
  const SummaryStats s = summarize(sample);
  if (!(s.sd > 0.0))
    throw DegenerateSampleError(
      "standardization is undefined for a sample with zero standard deviation");
  std::vector<double> z;
  z.reserve(s.n);
  for (double v : sample)
    z.push_back((v - s.mean) / s.sd);
  return Sample(std::move(z));
}

Sample
affine(const Sample& sample, double scale, double shift)
{
  std::vector<double> out;
  out.reserve(sample.size());
  for (double v : sample)
    out.push_back(scale * v + shift);
  return Sample(std::move(out));
}

Sample
convert_c_to_f(const Sample& sample)
{
  return affine(sample, 1.8, 32.0);
}

} // namespace reldisp
