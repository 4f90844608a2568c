#pragma once

#include "reldisp/core_stats.hpp"

#include <cstdint>
#include <random>

namespace reldisp {

//! Seedable generator with platform-independent output.
//!
//! The engine is std::mt19937_64, whose sequence the C++ standard fixes
//! bit for bit. The standard distributions are implementation-defined, so
//! the mappings to indices and normal deviates are done here: indices by
//! rejection sampling on the raw 64-bit output, normals by the Box-Muller
//! transform on 53-bit uniforms.
class Rng
{
public:
  explicit Rng(std::uint64_t seed)
    : engine_(seed)
  {}

  //! Independent stream `index` derived from `seed` by SplitMix64 mixing.
  //! Replicate r of a bootstrap always uses stream r.
  static Rng stream(std::uint64_t seed, std::uint64_t index);

  std::uint64_t next() { return engine_(); }

  //! Uniform on [0, 1) with 53 random bits.
  double uniform();

  //! Uniform integer in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound);

  double normal(double mean = 0.0, double sd = 1.0);

private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

std::uint64_t splitmix64(std::uint64_t x);

/// n draws from Normal(mean, sd).
Sample normal_sample(std::size_t n, double mean, double sd, std::uint64_t seed);

} // namespace reldisp
