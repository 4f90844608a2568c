#include <doctest.h>

#include "reldisp/errors.hpp"
#include "reldisp/kde.hpp"
#include "reldisp/random.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

using namespace reldisp;

namespace {

// Composite three-point Gauss-Legendre on [lo, hi]; never evaluates the
// endpoints, so jump discontinuities at the support edge do no harm.
template<typename F>
double
gauss_legendre(F&& f, double lo, double hi, int pieces)
{
  static const double node = std::sqrt(0.6);
  const double step = (hi - lo) / pieces;
  double total = 0.0;
  for (int i = 0; i < pieces; ++i) {
    const double c = lo + (i + 0.5) * step;
    const double r = 0.5 * step;
    total += r * (5.0 / 9.0 * f(c - r * node) + 8.0 / 9.0 * f(c) + 5.0 / 9.0 * f(c + r * node));
  }
  return total;
}

// Kink at 0 for the triangular kernel: integrate each half separately.
template<typename F>
double
integrate_kernel(KernelKind k, F&& g)
{
  const double a = std::isinf(kernel_support(k)) ? 40.0 : kernel_support(k);
  auto f = [&](double u) { return g(u) * kernel_value(k, u); };
  return gauss_legendre(f, -a, 0.0, 4000) + gauss_legendre(f, 0.0, a, 4000);
}

double
phi(double x)
{
  return std::exp(-0.5 * x * x) / std::sqrt(2.0 * std::numbers::pi);
}

} // namespace

TEST_CASE("kernel values")
{
  CHECK(kernel_value(KernelKind::Gaussian, 0) == doctest::Approx(0.39894).epsilon(1e-5));
  CHECK(kernel_value(KernelKind::Rectangular, 0) == doctest::Approx(0.28868).epsilon(1e-5));
  CHECK(kernel_value(KernelKind::Rectangular, 2) == 0.0);
  CHECK(kernel_value(KernelKind::Epanechnikov, 0) == doctest::Approx(0.33541).epsilon(1e-5));
  CHECK(kernel_value(KernelKind::Epanechnikov, 0) ==
        doctest::Approx(3.0 / (4.0 * std::sqrt(5.0))).epsilon(1e-15));

  for (auto k : all_kernels) {
    CAPTURE(to_string(k));
    for (double u : { 0.0, 0.3, 1.0, 1.7, 2.2, 3.1 }) {
      CHECK(kernel_value(k, u) >= 0.0);
      CHECK(kernel_value(k, u) == kernel_value(k, -u));
    }
    if (!std::isinf(kernel_support(k))) {
      CHECK(kernel_value(k, kernel_support(k) * 1.0001) == 0.0);
      CHECK(kernel_value(k, -kernel_support(k) * 1.0001) == 0.0);
    }
  }
}

TEST_CASE("every kernel has unit mass and unit variance")
{
  for (auto k : all_kernels) {
    CAPTURE(to_string(k));
    const double mass = integrate_kernel(k, [](double) { return 1.0; });
    const double mean = integrate_kernel(k, [](double u) { return u; });
    const double var = integrate_kernel(k, [](double u) { return u * u; });
    CHECK(std::abs(mass - 1.0) <= 1e-6);
    CHECK(std::abs(mean) <= 1e-12);
    CHECK(std::abs(var - 1.0) <= 1e-6);
  }
}

TEST_CASE("names")
{
  for (auto k : all_kernels)
    CHECK(kernel_from_name(to_string(k)) == k);
  CHECK(kernel_from_name("Gaussian") == KernelKind::Gaussian);
  CHECK_THROWS_AS(kernel_from_name("parabolic"), DomainError);

  CHECK(bandwidth_rule_from_name("nrd0").kind == BandwidthRule::Kind::Nrd0);
  CHECK(bandwidth_rule_from_name("SJ").kind == BandwidthRule::Kind::SJ);
  CHECK(bandwidth_rule_from_name("0.25") == BandwidthRule::fixed(0.25));
  CHECK(to_string(BandwidthRule::fixed(0.25)) == "0.25");
  for (auto kind : data_driven_rules) {
    const BandwidthRule r{ kind, 0.0 };
    CHECK(bandwidth_rule_from_name(to_string(r)) == r);
  }
  CHECK_THROWS_AS(bandwidth_rule_from_name("-1"), DomainError);
  CHECK_THROWS_AS(bandwidth_rule_from_name("0"), DomainError);
  CHECK_THROWS_AS(bandwidth_rule_from_name("silverman"), DomainError);
  CHECK_THROWS_AS(bandwidth_rule_from_name("1.5x"), DomainError);
}

TEST_CASE("single standard-normal bump")
{
  const auto est = estimate_density(Sample{ 0 }, KernelKind::Gaussian, BandwidthRule::fixed(1),
                                    { 7, 3.0 });
  CHECK(est.x == std::vector<double>{ -3, -2, -1, 0, 1, 2, 3 });
  CHECK(est.y[3] == doctest::Approx(0.39894).epsilon(1e-5));
  CHECK(est.h == 1.0);
  CHECK(est.n == 1);
  for (std::size_t i = 0; i < est.x.size(); ++i)
    CHECK(est.y[i] == doctest::Approx(phi(est.x[i])).epsilon(1e-14));

  // Seven points with unit spacing under-resolve the bump:
  // phi(0) + 2 phi(1) + 2 phi(2) + phi(3) = 0.99529
  const double coarse = trapezoid(est.x, est.y);
  CHECK(coarse == doctest::Approx(phi(0) + 2 * phi(1) + 2 * phi(2) + phi(3)).epsilon(1e-14));
  CHECK(std::abs(coarse - 1.0) <= 5e-3);

  // the Gaussian mass within three sd, once the grid is fine
  const auto fine = estimate_density(Sample{ 0 }, KernelKind::Gaussian, BandwidthRule::fixed(1));
  CHECK(std::abs(trapezoid(fine.x, fine.y) - 0.9973) <= 1e-4);
}

TEST_CASE("density grid")
{
  const Sample x{ 1, 4, 2 };
  const auto g = density_grid(x, 0.5, { 11, 2.0 });
  REQUIRE(g.size() == 11);
  CHECK(g.front() == 0.0);
  CHECK(g.back() == 5.0);
  CHECK(g[5] == doctest::Approx(2.5));
  CHECK_THROWS_AS(density_grid(x, 0.5, { 1, 2.0 }), DomainError);
  CHECK_THROWS_AS(density_grid(x, 0.5, { 10, -1.0 }), DomainError);
  CHECK_THROWS_AS(evaluate_density(x.values(), KernelKind::Gaussian, 0.0, g), DomainError);
}

TEST_CASE("symmetric sample gives a symmetric density")
{
  for (auto k : all_kernels) {
    const auto est = estimate_density(Sample{ -1, 1 }, k, BandwidthRule::fixed(1));
    const std::size_t m = est.x.size();
    for (std::size_t i = 0; i < m; ++i) {
      CHECK(std::abs(est.x[i] + est.x[m - 1 - i]) <= 1e-12);
      CHECK(std::abs(est.y[i] - est.y[m - 1 - i]) <= 1e-12);
    }
  }
}

TEST_CASE("densities are nonnegative and integrate to one")
{
  std::mt19937_64 gen(5);
  std::uniform_int_distribution<std::size_t> size(10, 300);
  std::uniform_int_distribution<std::size_t> pick_k(0, all_kernels.size() - 1);
  std::uniform_int_distribution<std::size_t> pick_r(0, data_driven_rules.size() - 1);
  for (int trial = 0; trial < 40; ++trial) {
    const Sample x = normal_sample(size(gen), 10.0, 3.0, 1000 + trial);
    const auto k = all_kernels[pick_k(gen)];
    const BandwidthRule r{ data_driven_rules[pick_r(gen)], 0.0 };
    CAPTURE(to_string(k));
    CAPTURE(to_string(r));
    const auto est = estimate_density(x, k, r);
    CHECK(est.h > 0.0);
    CHECK(std::all_of(est.y.begin(), est.y.end(), [](double y) { return y >= 0.0; }));
    CHECK(std::abs(trapezoid(est.x, est.y) - 1.0) <= 5e-3);
  }
}

TEST_CASE("affine equivariance")
{
  std::mt19937_64 gen(17);
  std::uniform_real_distribution<double> u(-10, 10);
  for (int trial = 0; trial < 50; ++trial) {
    const Sample x = normal_sample(40, u(gen), 2.0, 77 + trial);
    double a = u(gen);
    if (std::abs(a) < 0.05)
      a = 0.5;
    const double b = 10 * u(gen);
    const auto k = all_kernels[trial % all_kernels.size()];
    const double h = 0.4;

    const auto base = estimate_density(x, k, BandwidthRule::fixed(h), { 128, 3.0 });
    std::vector<double> mapped(base.x.size());
    for (std::size_t i = 0; i < mapped.size(); ++i)
      mapped[i] = a * base.x[i] + b;
    const Sample y = affine(x, a, b);
    const auto moved = evaluate_density(y.values(), k, std::abs(a) * h, mapped);
    for (std::size_t i = 0; i < mapped.size(); ++i)
      CHECK(std::abs(moved[i] - base.y[i] / std::abs(a)) <= 1e-10);

    if (a > 0) {
      const auto est = estimate_density(y, k, BandwidthRule::fixed(a * h), { 128, 3.0 });
      for (std::size_t i = 0; i < mapped.size(); ++i)
        CHECK(std::abs(est.x[i] - mapped[i]) <= 1e-10 * std::max(1.0, std::abs(mapped[i])));
    }
  }
}

TEST_CASE("estimates converge to the true density as n grows")
{
  auto max_error = [](std::size_t n) {
    const Sample x = normal_sample(n, 0.0, 1.0, 4242);
    const auto est = estimate_density(x, KernelKind::Gaussian, {});
    double worst = 0.0;
    for (std::size_t i = 0; i < est.x.size(); ++i)
      worst = std::max(worst, std::abs(est.y[i] - phi(est.x[i])));
    return worst;
  };
  const double e100 = max_error(100);
  const double e10000 = max_error(10000);
  CHECK(e10000 < e100);
  CHECK(e10000 < 0.02);
}
