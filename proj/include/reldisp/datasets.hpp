#pragma once

#include "reldisp/core_stats.hpp"

#include <cstdint>

// Small published example datasets, plus seeded generators standing in for
// the examples whose raw values were never published.
namespace reldisp::datasets {

//! Twelve monthly mean temperatures in degrees Celsius (Eisenhauer's example).
Sample celsius();

//! The same twelve temperatures as printed in Fahrenheit.
Sample fahrenheit_printed();

//! Thirty values, symmetric about 6 (after Behrens and Yu).
Sample behrens();

//! Seven statures in cm.
Sample stature();

//! Marksman target scores: A = {12, 6, 3}, B = A - 2, C = 3A, D = 3A - 2.
Sample target_a();
Sample target_b();
Sample target_c();
Sample target_d();

//! 800 heart rates from 10-second pulse counts (multiples of 6 bpm).
Sample synthetic_bpm(std::uint64_t seed);

//! 30 female and 10 male statures in cm, rounded to 0.1 cm.
Sample synthetic_heights_female(std::uint64_t seed);
Sample synthetic_heights_male(std::uint64_t seed);

inline constexpr std::uint64_t default_bpm_seed = 2022;
inline constexpr std::uint64_t default_heights_seed = 1896;
inline constexpr std::uint64_t default_bootstrap_seed = 1993;

} // namespace reldisp::datasets
