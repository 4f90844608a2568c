#include "reldisp/datasets.hpp"

#include "reldisp/random.hpp"

#include <cmath>

namespace reldisp::datasets {

Sample
celsius()
{
  return { 6.7, 6.7, 7.8, 6.9, 13.2, 14.7, 18.3, 17.0, 15.1, 12.3, 7.2, 5.5 };
}

Sample
fahrenheit_printed()
{
  return { 44.06, 44.06, 46.04, 44.42, 55.76, 58.46,
           64.94, 62.60, 59.18, 54.14, 44.96, 41.90 };
}

Sample
behrens()
{
  return { 1, 1, 2, 2, 3, 3, 4, 4, 5,  5,  5,  5,  6,  6,  6,
           6, 6, 6, 7, 7, 7, 7, 8, 8, 9, 9, 10, 10, 11, 11 };
}

Sample
stature()
{
  return { 162, 169, 172, 173, 175, 180, 185 };
}

Sample
target_a()
{
  return { 12, 6, 3 };
}

Sample
target_b()
{
  return affine(target_a(), 1.0, -2.0);
}

Sample
target_c()
{
  return affine(target_a(), 3.0, 0.0);
}

Sample
target_d()
{
  return affine(target_a(), 3.0, -2.0);
}

Sample
synthetic_bpm(std::uint64_t seed)
{
  Rng rng(seed);
  std::vector<double> v(800);
  for (auto& x : v) {
    const double beats = std::round(rng.normal(75.0, 9.0) / 6.0);
    x = 6.0 * beats;
  }
  return Sample(std::move(v));
}

namespace {

Sample
rounded_normal(std::size_t n, double mean, double sd, std::uint64_t seed)
{
  Rng rng(seed);
  std::vector<double> v(n);
  for (auto& x : v)
    x = std::round(rng.normal(mean, sd) * 10.0) / 10.0;
  return Sample(std::move(v));
}

} // namespace

Sample
synthetic_heights_female(std::uint64_t seed)
{
  return rounded_normal(30, 160.0, 6.0, Rng::stream(seed, 0).next());
}

Sample
synthetic_heights_male(std::uint64_t seed)
{
  return rounded_normal(10, 175.0, 9.0, Rng::stream(seed, 1).next());
}

} // namespace reldisp::datasets
