#include "reldisp/kde.hpp"

#include "reldisp/errors.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <limits>
#include <numbers>

namespace reldisp {

namespace {

using std::numbers::pi;

// half-widths giving each compact kernel unit variance
const double rect_a = std::sqrt(3.0);
const double tri_a = std::sqrt(6.0);
const double epan_a = std::sqrt(5.0);
const double biw_a = std::sqrt(7.0);
const double cos_a = 1.0 / std::sqrt(1.0 / 3.0 - 2.0 / (pi * pi));
const double optcos_a = 1.0 / std::sqrt(1.0 - 8.0 / (pi * pi));

std::string
lower(std::string_view s)
{
  std::string out(s);
  for (auto& c : out)
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

} // namespace

std::string_view
to_string(KernelKind kind)
{
  switch (kind) {
    case KernelKind::Gaussian:
      return "gaussian";
    case KernelKind::Epanechnikov:
      return "epanechnikov";
    case KernelKind::Rectangular:
      return "rectangular";
    case KernelKind::Triangular:
      return "triangular";
    case KernelKind::Biweight:
      return "biweight";
    case KernelKind::Cosine:
      return "cosine";
    case KernelKind::OptCosine:
      return "optcosine";
  }
  return "unknown";
}

KernelKind
kernel_from_name(std::string_view name)
{
  const std::string key = lower(name);
  for (auto k : all_kernels)
    if (to_string(k) == key)
      return k;
  throw DomainError("unknown kernel '" + std::string(name) + "'");
}

double
kernel_support(KernelKind kind)
{
  switch (kind) {
    case KernelKind::Gaussian:
      return std::numeric_limits<double>::infinity();
    case KernelKind::Epanechnikov:
      return epan_a;
    case KernelKind::Rectangular:
      return rect_a;
    case KernelKind::Triangular:
      return tri_a;
    case KernelKind::Biweight:
      return biw_a;
    case KernelKind::Cosine:
      return cos_a;
    case KernelKind::OptCosine:
      return optcos_a;
  }
  return 0.0;
}

double
kernel_value(KernelKind kind, double u)
{
  const double au = std::abs(u);
  switch (kind) {
    case KernelKind::Gaussian:
      return std::exp(-0.5 * u * u) / std::sqrt(2.0 * pi);
    case KernelKind::Epanechnikov: {
      if (au >= epan_a)
        return 0.0;
      const double t = u / epan_a;
      return 0.75 * (1.0 - t * t) / epan_a;
    }
    case KernelKind::Rectangular:
      return au < rect_a ? 0.5 / rect_a : 0.0;
    case KernelKind::Triangular:
      return au < tri_a ? (1.0 - au / tri_a) / tri_a : 0.0;
    case KernelKind::Biweight: {
      if (au >= biw_a)
        return 0.0;
      const double t = u / biw_a;
      const double q = 1.0 - t * t;
      return 15.0 / 16.0 * q * q / biw_a;
    }
    case KernelKind::Cosine:
      return au < cos_a ? (1.0 + std::cos(pi * u / cos_a)) / (2.0 * cos_a) : 0.0;
    case KernelKind::OptCosine:
      return au < optcos_a ? pi / 4.0 * std::cos(pi * u / (2.0 * optcos_a)) / optcos_a
                           : 0.0;
  }
  return 0.0;
}

std::string
to_string(const BandwidthRule& rule)
{
  switch (rule.kind) {
    case BandwidthRule::Kind::Nrd0:
      return "nrd0";
    case BandwidthRule::Kind::Nrd:
      return "nrd";
    case BandwidthRule::Kind::Ucv:
      return "ucv";
    case BandwidthRule::Kind::Bcv:
      return "bcv";
    case BandwidthRule::Kind::SJ:
      return "sj";
    case BandwidthRule::Kind::Fixed: {
      char buf[32];
      auto res = std::to_chars(buf, buf + sizeof buf, rule.h);
      return std::string(buf, res.ptr);
    }
  }
  return "unknown";
}

BandwidthRule
bandwidth_rule_from_name(std::string_view name)
{
  const std::string key = lower(name);
  if (key == "nrd0")
    return { BandwidthRule::Kind::Nrd0, 0.0 };
  if (key == "nrd")
    return { BandwidthRule::Kind::Nrd, 0.0 };
  if (key == "ucv")
    return { BandwidthRule::Kind::Ucv, 0.0 };
  if (key == "bcv")
    return { BandwidthRule::Kind::Bcv, 0.0 };
  if (key == "sj" || key == "sj-ste")
    return { BandwidthRule::Kind::SJ, 0.0 };

  double h = 0.0;
  auto res = std::from_chars(key.data(), key.data() + key.size(), h);
  if (res.ec != std::errc() || res.ptr != key.data() + key.size())
    throw DomainError("unknown bandwidth rule '" + std::string(name) + "'");
  if (!(h > 0.0) || !std::isfinite(h))
    throw DomainError("fixed bandwidth must be positive and finite");
  return BandwidthRule::fixed(h);
}

std::vector<double>
evaluate_density(std::span<const double> data, KernelKind kernel, double h,
                 std::span<const double> points)
{
  if (!(h > 0.0) || !std::isfinite(h))
    throw DomainError("bandwidth must be positive and finite");
  if (data.empty())
    throw InvalidSampleError("density of an empty sequence");

  const double norm = 1.0 / (static_cast<double>(data.size()) * h);
  std::vector<double> y(points.size());
  for (std::size_t j = 0; j < points.size(); ++j) {
    double sum = 0.0;
    for (double xi : data)
      sum += kernel_value(kernel, (points[j] - xi) / h);
    y[j] = sum * norm;
  }
  return y;
}

std::vector<double>
density_grid(const Sample& sample, double h, const DensityOptions& options)
{
  if (options.grid_points < 2)
    throw DomainError("density grid needs at least 2 points");
  if (!(options.cut >= 0.0) || !std::isfinite(options.cut))
    throw DomainError("cut must be nonnegative and finite");
  const SummaryStats s = summarize(sample);
  const double lo = s.min - options.cut * h;
  const double hi = s.max + options.cut * h;
  const std::size_t m = options.grid_points;
  std::vector<double> grid(m);
  const double step = (hi - lo) / static_cast<double>(m - 1);
  for (std::size_t i = 0; i < m; ++i)
    grid[i] = lo + static_cast<double>(i) * step;
  grid.back() = hi;
  return grid;
}

DensityEstimate
estimate_density(const Sample& sample, KernelKind kernel,
                 const BandwidthRule& rule, const DensityOptions& options)
{
  const double h = bandwidth(rule, sample);
  DensityEstimate est;
  est.h = h;
  est.kernel = kernel;
  est.n = sample.size();
  est.x = density_grid(sample, h, options);
  est.y = evaluate_density(sample.values(), kernel, h, est.x);
  return est;
}

double
trapezoid(std::span<const double> x, std::span<const double> y)
{
  if (x.size() != y.size())
    throw DomainError("trapezoid: x and y lengths differ");
  double area = 0.0;
  for (std::size_t i = 1; i < x.size(); ++i)
    area += 0.5 * (x[i] - x[i - 1]) * (y[i] + y[i - 1]);
  return area;
}

} // namespace reldisp
