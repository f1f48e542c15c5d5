#pragma once

namespace qnb {

// CODATA value, J*s
inline constexpr double kHbar = 1.054571817e-34;

// m/s
inline constexpr double kSpeedOfLight = 299792458.0;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

// Nd:YAG carrier used by current gravitational-wave interferometers, m
inline constexpr double kDefaultLaserWavelength = 1064e-9;

} // namespace qnb
