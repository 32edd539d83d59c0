#pragma once

#include <cmath>

namespace rislink {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;
inline constexpr double kSpeedOfLightMps = 299792458.0;

inline double deg_to_rad(double deg) { return deg * (kPi / 180.0); }
inline double rad_to_deg(double rad) { return rad * (180.0 / kPi); }

/// Power ratio conversions (dB <-> linear).
inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
inline double linear_to_db(double linear) { return 10.0 * std::log10(linear); }

/// Wrap an angle into [0, 2*pi); implements x - 2*pi*floor(x / 2*pi) with the
/// boundary pinned so the result never equals 2*pi.
inline double wrap_two_pi(double angle_rad) {
    double wrapped = angle_rad - kTwoPi * std::floor(angle_rad / kTwoPi);
    if (wrapped >= kTwoPi) wrapped -= kTwoPi;
    if (wrapped < 0.0) wrapped = 0.0;
    return wrapped;
}

/// Shortest unsigned angular distance between two angles, in [0, pi].
inline double circular_distance(double a_rad, double b_rad) {
    const double d = wrap_two_pi(a_rad - b_rad);
    return d > kPi ? kTwoPi - d : d;
}

}  // namespace rislink
