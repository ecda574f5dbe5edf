#pragma once

#include <cmath>

namespace orbitcam {

inline constexpr double kPi = 3.14159265358979323846;

inline double deg2rad(double deg) { return deg * kPi / 180.0; }
inline double rad2deg(double rad) { return rad * 180.0 / kPi; }

// Normalize an angle to [0, 360).
inline double wrap360(double deg) {
    double d = std::fmod(deg, 360.0);
    if (d < 0.0) d += 360.0;
    return d >= 360.0 ? 0.0 : d;
}

// Shortest signed difference, mapped to (-180, 180].
inline double wrap180(double deg) {
    double d = std::fmod(deg, 360.0);
    if (d <= -180.0) d += 360.0;
    if (d > 180.0) d -= 360.0;
    return d;
}

// Map into [-90, 90] modulo 180 (period-180 residual).
inline double wrap90(double deg) {
    double d = std::fmod(deg, 180.0);
    if (d > 90.0) d -= 180.0;
    if (d < -90.0) d += 180.0;
    return d;
}

// Unsigned angular distance on the circle, in [0, 180].
inline double angular_distance(double a_deg, double b_deg) {
    return std::abs(wrap180(a_deg - b_deg));
}

}  // namespace orbitcam
