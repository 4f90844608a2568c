#include "reldisp/random.hpp"

#include "reldisp/errors.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace reldisp {

std::uint64_t
splitmix64(std::uint64_t x)
{
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Rng
Rng::stream(std::uint64_t seed, std::uint64_t index)
{
  return Rng(splitmix64(splitmix64(seed) ^ splitmix64(~index)));
}

double
Rng::uniform()
{
  return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

std::uint64_t
Rng::below(std::uint64_t bound)
{
  if (bound == 0)
    throw DomainError("Rng::below requires a positive bound");
  // reject the top partial block so every residue is equally likely
  const std::uint64_t limit =
    std::numeric_limits<std::uint64_t>::max() -
    std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t r;
  do {
    r = next();
  } while (r >= limit);
  return r % bound;
}

double
Rng::normal(double mean, double sd)
{
  if (has_spare_) {
    has_spare_ = false;
    return mean + sd * spare_;
  }
  double u1;
  do {
    u1 = uniform();
  } while (u1 == 0.0);
  const double u2 = uniform();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  spare_ = radius * std::sin(angle);
  has_spare_ = true;
  return mean + sd * radius * std::cos(angle);
}

Sample
normal_sample(std::size_t n, double mean, double sd, std::uint64_t seed)
{
  Rng rng(seed);
  std::vector<double> v(n);
  for (auto& x : v)
    x = rng.normal(mean, sd);
  return Sample(std::move(v));
}

} // namespace reldisp
