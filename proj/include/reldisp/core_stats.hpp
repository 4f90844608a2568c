#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace reldisp {

//! A non-empty collection of finite measurements. Validated once at
//! construction; everything downstream may assume finite data.
class Sample
{
public:
  explicit Sample(std::vector<double> values);
  Sample(std::initializer_list<double> values);

  std::span<const double> values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }

  auto begin() const noexcept { return values_.begin(); }
  auto end() const noexcept { return values_.end(); }

  //! Sorted copy of the values.
  std::vector<double> sorted() const;

  bool operator==(const Sample&) const = default;

private:
  std::vector<double> values_;
};

struct SummaryStats
{
  std::size_t n = 0;
  double mean = 0.0;
  double sd = 0.0; // denominator n - 1; 0 for a singleton
  double min = 0.0;
  double max = 0.0;
  double range = 0.0;
};

SummaryStats summarize(const Sample& sample);

//! Linear-interpolation quantile on order statistics (the "type 7" rule).
//! Throws DomainError when p is outside [0, 1].
double quantile(const Sample& sample, double p);

//! Same, on data that is already sorted ascending.
double quantile_sorted(std::span<const double> sorted, double p);

//! z-scores (x - mean) / sd, preserving order. Throws DegenerateSampleError
//! when sd == 0.
Sample standardize(const Sample& sample);

//! Elementwise a * x + b.
Sample affine(const Sample& sample, double scale, double shift);

//! Celsius to Fahrenheit, F = 1.8 C + 32.
Sample convert_c_to_f(const Sample& sample);

} // namespace reldisp
