#pragma once

#include "reldisp/core_stats.hpp"

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace reldisp {

//! Smoothing kernels. Every kernel is scaled to unit variance, so a
//! bandwidth h always means "h standard deviations of smoothing" and the
//! bandwidth rules below apply to any kernel.
enum class KernelKind
{
  Gaussian,
  Epanechnikov,
  Rectangular,
  Triangular,
  Biweight,
  Cosine,
  OptCosine
};

inline constexpr std::array<KernelKind, 7> all_kernels{
  KernelKind::Gaussian,   KernelKind::Epanechnikov, KernelKind::Rectangular,
  KernelKind::Triangular, KernelKind::Biweight,     KernelKind::Cosine,
  KernelKind::OptCosine
};

std::string_view to_string(KernelKind kind);
//! Throws DomainError for an unknown name.
KernelKind kernel_from_name(std::string_view name);

/// Density of the unit-variance kernel at u; 0 outside the support of the
/// compact kernels.
double kernel_value(KernelKind kind, double u);

/// Half-width of the support (infinity for the Gaussian).
double kernel_support(KernelKind kind);

struct BandwidthRule
{
  enum class Kind
  {
    Nrd0,
    Nrd,
    Ucv,
    Bcv,
    SJ,
    Fixed
  };

  Kind kind = Kind::Nrd0;
  double h = 0.0; // only meaningful for Fixed

  static BandwidthRule fixed(double h) { return { Kind::Fixed, h }; }
  bool operator==(const BandwidthRule&) const = default;
};

inline constexpr std::array<BandwidthRule::Kind, 5> data_driven_rules{
  BandwidthRule::Kind::Nrd0, BandwidthRule::Kind::Nrd, BandwidthRule::Kind::Ucv,
  BandwidthRule::Kind::Bcv, BandwidthRule::Kind::SJ
};

std::string to_string(const BandwidthRule& rule);
//! Accepts nrd0, nrd, ucv, bcv, sj (case-insensitive) or a positive number.
BandwidthRule bandwidth_rule_from_name(std::string_view name);

/// Selects a bandwidth for the sample.
///
/// Nrd0 and Nrd are the rule-of-thumb scales 0.9 and 1.06 times
/// min(s, IQR/1.34) n^(-1/5). Ucv and Bcv minimise the unbiased / biased
/// cross-validation score of the Gaussian kernel on [0.1 h_os, h_os], with
/// the oversmoothed bandwidth h_os = 1.144 s n^(-1/5). SJ solves the
/// Sheather-Jones plug-in equation on the same interval. The data-driven
/// rules need n >= 2 and non-constant data (DegenerateSampleError).
double bandwidth(const BandwidthRule& rule, const Sample& sample);

struct DensityEstimate
{
  std::vector<double> x;
  std::vector<double> y;
  double h = 0.0;
  KernelKind kernel = KernelKind::Gaussian;
  std::size_t n = 0;
};

struct DensityOptions
{
  std::size_t grid_points = 512;
  double cut = 3.0;
};

/// Evaluates the kernel density estimate on m equally spaced points over
/// [min - cut h, max + cut h].
DensityEstimate estimate_density(const Sample& sample, KernelKind kernel,
                                 const BandwidthRule& rule,
                                 const DensityOptions& options = {});

/// The density grid that estimate_density would use for bandwidth h.
std::vector<double> density_grid(const Sample& sample, double h,
                                 const DensityOptions& options = {});

/// (1 / (n h)) sum_i K((g - x_i) / h) at every point g.
std::vector<double> evaluate_density(std::span<const double> data,
                                     KernelKind kernel, double h,
                                     std::span<const double> points);

/// Trapezoid integral of y over x.
double trapezoid(std::span<const double> x, std::span<const double> y);

namespace bw {

// Scores used by the data-driven selectors, exposed for testing. All take
// the data sorted ascending and evaluate exact pairwise sums.

double ucv_score(std::span<const double> sorted, double h);
double bcv_score(std::span<const double> sorted, double h);

//! Plug-in estimate of the integrated squared second derivative functional
//! (psi_4) with a Gaussian pilot of bandwidth a.
double sj_phi4(std::span<const double> sorted, double a);
//! Same for the sixth-derivative functional (psi_6); returned with the sign
//! convention of the estimator, i.e. normally negative.
double sj_phi6(std::span<const double> sorted, double b);

//! Left-hand side of the solve-the-equation plug-in condition; its root in
//! h is the SJ bandwidth.
double sj_equation(std::span<const double> sorted, double h, double alpha_const);

double oversmoothed(const SummaryStats& stats);

} // namespace bw

} // namespace reldisp
