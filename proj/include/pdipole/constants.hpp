#pragma once

#include <numbers>

namespace pdipole::constants {

inline constexpr double kSpeedOfLight = 299'792'458.0;   // m/s, exact
inline constexpr double kMu0 = 1.25663706212e-6;          // H/m
inline constexpr double kEps0 = 1.0 / (kMu0 * kSpeedOfLight * kSpeedOfLight);
inline constexpr double kPi = std::numbers::pi;
inline constexpr double kMmPerMetre = 1000.0;

}  // namespace pdipole::constants
