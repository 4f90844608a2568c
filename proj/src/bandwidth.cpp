#include "reldisp/errors.hpp"
#include "reldisp/kde.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <string>

namespace reldisp {

namespace {

using std::numbers::pi;

// exp(-delta / 4) underflows to irrelevance past this squared distance
constexpr double max_delta = 1000.0;

constexpr double cv_relative_tol = 1e-4;
constexpr double sj_relative_tol = 1e-6;

// Sum of f(delta) over pairs i < j, delta = ((x_j - x_i) / h)^2. The data is
// sorted, so the inner loop stops once pairs are too far apart to matter.
template<typename F>
double
pair_sum(std::span<const double> sorted, double h, F&& f)
{
  double sum = 0.0;
  const std::size_t n = sorted.size();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double d = (sorted[j] - sorted[i]) / h;
      const double delta = d * d;
      if (delta >= max_delta)
        break;
      sum += f(delta);
    }
  }
  return sum;
}

void
require_selectable(const SummaryStats& s)
{
  if (s.n < 2)
    throw InsufficientSampleError("bandwidth selection requires n >= 2");
  if (!(s.range > 0.0))
    throw DegenerateSampleError(
      "bandwidth selection is undefined for constant data");
}

double
iqr(std::span<const double> sorted)
{
  return quantile_sorted(sorted, 0.75) - quantile_sorted(sorted, 0.25);
}

double
rule_of_thumb(double factor, const SummaryStats& s, std::span<const double> sorted)
{
  double scale = std::min(s.sd, iqr(sorted) / 1.34);
  if (!(scale > 0.0))
    scale = s.sd;
  return factor * scale * std::pow(static_cast<double>(s.n), -0.2);
}

// Golden-section minimisation on [lo, hi]. When the two interior scores tie
// the left part is kept, so ties resolve toward the smaller bandwidth.
double
golden_section(const std::function<double(double)>& f, double lo, double hi)
{
  const double lower = lo;
  const double upper = hi;
  const double ratio = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = hi - ratio * (hi - lo);
  double d = lo + ratio * (hi - lo);
  double fc = f(c);
  double fd = f(d);
  while (hi - lo > cv_relative_tol * 0.5 * (lo + hi)) {
    if (!std::isfinite(fc) || !std::isfinite(fd))
      throw NoMinimumError("cross-validation score is not finite in [" +
                             std::to_string(lower) + ", " +
                             std::to_string(upper) + "]",
                           lower, upper);
    if (fc <= fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - ratio * (hi - lo);
      fc = f(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + ratio * (hi - lo);
      fd = f(d);
    }
  }
  return fc <= fd ? c : d;
}

double
select_cv(bool biased, const SummaryStats& s, std::span<const double> sorted)
{
  const double h_os = bw::oversmoothed(s);
  auto score = [&](double h) {
    return biased ? bw::bcv_score(sorted, h) : bw::ucv_score(sorted, h);
  };
  return golden_section(score, 0.1 * h_os, h_os);
}

double
select_sj(const SummaryStats& s, std::span<const double> sorted)
{
  const double n = static_cast<double>(s.n);
  double scale = std::min(s.sd, iqr(sorted) / 1.349);
  if (!(scale > 0.0))
    scale = s.sd;
  const double a = 1.24 * scale * std::pow(n, -1.0 / 7.0);
  const double b = 1.23 * scale * std::pow(n, -1.0 / 9.0);

  const double td = -bw::sj_phi6(sorted, b);
  if (!std::isfinite(td) || td <= 0.0)
    throw NoMinimumError("sample is too sparse for the Sheather-Jones pilot "
                         "estimate",
                         0.0, 0.0);
  const double alpha = 1.357 * std::pow(bw::sj_phi4(sorted, a) / td, 1.0 / 7.0);
  if (!std::isfinite(alpha))
    throw NoMinimumError("Sheather-Jones pilot bandwidth is not finite", 0.0, 0.0);

  auto f = [&](double h) { return bw::sj_equation(sorted, h, alpha); };
  const double h_os = bw::oversmoothed(s);
  double lo = 0.1 * h_os;
  double hi = h_os;
  double flo = f(lo);
  double fhi = f(hi);
  // widen alternately until the root is bracketed
  for (int attempt = 1; flo * fhi > 0.0; ++attempt) {
    if (attempt > 99)
      throw NoMinimumError("no Sheather-Jones solution in [" +
                             std::to_string(lo) + ", " + std::to_string(hi) +
                             "]",
                           lo, hi);
    if (attempt % 2) {
      hi *= 1.2;
      fhi = f(hi);
    } else {
      lo /= 1.2;
      flo = f(lo);
    }
  }

  while (hi - lo > sj_relative_tol * 0.5 * (lo + hi)) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if (fm == 0.0)
      return mid;
    if ((fm < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

} // namespace

namespace bw {

double
oversmoothed(const SummaryStats& stats)
{
  return 1.144 * stats.sd * std::pow(static_cast<double>(stats.n), -0.2);
}

double
ucv_score(std::span<const double> sorted, double h)
{
  const double n = static_cast<double>(sorted.size());
  const double sum = pair_sum(sorted, h, [](double delta) {
    return std::exp(-delta / 4.0) - std::sqrt(8.0) * std::exp(-delta / 2.0);
  });
  return (0.5 + sum / n) / (n * h * std::sqrt(pi));
}

double
bcv_score(std::span<const double> sorted, double h)
{
  const double n = static_cast<double>(sorted.size());
  const double sum = pair_sum(sorted, h, [](double delta) {
    return std::exp(-delta / 4.0) * (delta * delta - 12.0 * delta + 12.0);
  });
  return (1.0 + sum / (32.0 * n)) / (2.0 * n * h * std::sqrt(pi));
}

double
sj_phi4(std::span<const double> sorted, double a)
{
  const double n = static_cast<double>(sorted.size());
  double sum = pair_sum(sorted, a, [](double delta) {
    return std::exp(-delta / 2.0) * (delta * delta - 6.0 * delta + 3.0);
  });
  sum = 2.0 * sum + 3.0 * n;
  return sum / (n * (n - 1.0) * std::pow(a, 5.0) * std::sqrt(2.0 * pi));
}

double
sj_phi6(std::span<const double> sorted, double b)
{
  const double n = static_cast<double>(sorted.size());
  double sum = pair_sum(sorted, b, [](double delta) {
    return std::exp(-delta / 2.0) *
           (delta * delta * delta - 15.0 * delta * delta + 45.0 * delta - 15.0);
  });
  sum = 2.0 * sum - 15.0 * n;
  return sum / (n * (n - 1.0) * std::pow(b, 7.0) * std::sqrt(2.0 * pi));
}

double
sj_equation(std::span<const double> sorted, double h, double alpha_const)
{
  const double n = static_cast<double>(sorted.size());
  const double c1 = 1.0 / (2.0 * std::sqrt(pi) * n);
  const double sd = sj_phi4(sorted, alpha_const * std::pow(h, 5.0 / 7.0));
  return std::pow(c1 / sd, 0.2) - h;
}

} // namespace bw

double
bandwidth(const BandwidthRule& rule, const Sample& sample)
{
  if (rule.kind == BandwidthRule::Kind::Fixed) {
    if (!(rule.h > 0.0) || !std::isfinite(rule.h))
      throw DomainError("fixed bandwidth must be positive and finite");
    return rule.h;
  }

  const SummaryStats s = summarize(sample);
  require_selectable(s);
  const std::vector<double> sorted = sample.sorted();

  switch (rule.kind) {
    case BandwidthRule::Kind::Nrd0:
      return rule_of_thumb(0.9, s, sorted);
    case BandwidthRule::Kind::Nrd:
      return rule_of_thumb(1.06, s, sorted);
    case BandwidthRule::Kind::Ucv:
      return select_cv(false, s, sorted);
    case BandwidthRule::Kind::Bcv:
      return select_cv(true, s, sorted);
    case BandwidthRule::Kind::SJ:
      return select_sj(s, sorted);
    case BandwidthRule::Kind::Fixed:
      break;
  }
  return rule.h;
}

} // namespace reldisp
