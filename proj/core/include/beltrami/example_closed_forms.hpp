#pragma once

#include <array>
#include <cmath>
#include <complex>

namespace beltrami::example {

// Closed forms for the profile alpha(y) = 1/sqrt(1 - y^2), c1 = 0, c2 = 1,
// z0 = 0: the recursive integrals evaluate in elementary terms, which makes
// this profile the standard cross-check for the whole pipeline.
//
// All expressions below were derived by hand from the recursions and
// re-verified symbolically; they satisfy dY^(n)/dy = n Y^(n-1) w_n exactly.

inline double alpha(double y) { return 1.0 / std::sqrt(1.0 - y * y); }
inline double f0(double y) { return std::pow(1.0 - y * y, 0.75); }
inline double sqrt_alpha_f0(double y) { return std::sqrt(1.0 - y * y); }

inline double Y1(double y) {
    const double u = 1.0 - y * y;
    return 0.25 * y * u * std::sqrt(u) + 0.375 * y * std::sqrt(u) +
           0.375 * std::asin(y);
}

inline double Yt1(double y) { return y / std::sqrt(1.0 - y * y); }

inline double Y2(double y) {
    return 0.25 * y * y + 0.75 * y * std::asin(y) / std::sqrt(1.0 - y * y);
}

inline double Yt2(double y) { return y * y - 0.5 * y * y * y * y; }

inline double Y3(double y) {
    const double u = 1.0 - y * y;
    const double s = std::sqrt(u);
    return -0.125 * y * u * u * s + (1.0 / 32.0) * y * u * s +
           y * s * (51.0 / 128.0 - (9.0 / 64.0) * y * y) -
           (9.0 / 16.0) * u * u * std::asin(y) + (33.0 / 128.0) * std::asin(y);
}

inline double Yt3(double y) {
    return 0.75 * y * (1.0 + y * y) / std::sqrt(1.0 - y * y) -
           0.75 * std::asin(y);
}

/// *Z^(n)(a, 0; z) for n = 1..3 and a in {1, i}.
inline std::complex<double> Z(int n, bool unit_flavor, double x, double y) {
    switch (n) {
    case 1:
        return unit_flavor ? std::complex<double>(x, Y1(y))
                           : std::complex<double>(-Yt1(y), x);
    case 2:
        return unit_flavor
                   ? std::complex<double>(x * x - Y2(y), 2.0 * x * Y1(y))
                   : std::complex<double>(-2.0 * x * Yt1(y), x * x - Yt2(y));
    case 3:
        return unit_flavor
                   ? std::complex<double>(x * x * x - 3.0 * x * Y2(y),
                                          3.0 * x * x * Y1(y) - Y3(y))
                   : std::complex<double>(Yt3(y) - 3.0 * x * x * Yt1(y),
                                          x * x * x - 3.0 * x * Yt2(y));
    default:
        return {0.0, 0.0};
    }
}

/// The seven closed-form fields (B1, B2, B3) generated by orders n <= 3.
inline std::array<double, 3> B_field(int index, double x, double y) {
    const double s = std::sqrt(1.0 - y * y);
    const double u = 1.0 - y * y;
    const double as = std::asin(y);
    switch (index) {
    case 0: return {y, 0.0, s};
    case 1: return {x * y, u, x * s};
    case 2: return {s, 0.0, -y};
    case 3:
        return {0.75 * s * as + y * (x * x - 0.75 * y * y + 1.25),
                2.0 * x * u,
                s * (x * x - 0.25 * y * y) - 0.75 * y * as};
    case 4: return {2.0 * x * s, -2.0 * y * s, -2.0 * x * y};
    case 5:
        return {2.25 * x * s * as + y * (x * x * x - 2.25 * x * y * y + 3.75 * x),
                (3.0 * x * x - 0.75 * y * y) * u - 2.25 * y * s * as,
                s * (x * x * x - 0.75 * x * y * y) - 2.25 * x * y * as};
    case 6:
        return {(3.0 * x * x - 2.25 * y * y) * s - 0.75 * y * as,
                -6.0 * x * y * s,
                -3.0 * x * x * y + 0.75 * y * (1.0 + y * y) - 0.75 * s * as};
    default: return {0.0, 0.0, 0.0};
    }
}

/// Deterministic quasi-uniform points in the disk |z| <= radius
/// (golden-angle spiral).
inline std::array<double, 2> disk_point(int i, int count, double radius) {
    constexpr double golden_angle = 2.39996322972865332;
    const double r = radius * std::sqrt((i + 0.5) / count);
    const double t = golden_angle * i;
    return {r * std::cos(t), r * std::sin(t)};
}

} // namespace beltrami::example
