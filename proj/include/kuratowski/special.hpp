#pragma once

#include <cmath>
#include <numbers>
#include <string>

#include "kuratowski/errors.hpp"

namespace kuratowski {

inline constexpr double pi = std::numbers::pi;

/// Largest eps for which the curvature-driven net machinery is defined.
inline constexpr double max_theory_eps = 4.0 / (5.0 * pi);

/// acos with the argument clamped to [-1, 1]. Excursions beyond the
/// tolerance are treated as logic errors, not rounding.
inline double checked_acos(double v, double excursion_tol = 1e-9) {
    if (v > 1.0 + excursion_tol || v < -1.0 - excursion_tol)
        throw DomainError("acos argument " + std::to_string(v) + " exceeds [-1,1] beyond tolerance");
    if (v > 1.0) v = 1.0;
    if (v < -1.0) v = -1.0;
    return std::acos(v);
}

/// asin with the same clamping policy as checked_acos.
inline double checked_asin(double v, double excursion_tol = 1e-9) {
    if (v > 1.0 + excursion_tol || v < -1.0 - excursion_tol)
        throw DomainError("asin argument " + std::to_string(v) + " exceeds [-1,1] beyond tolerance");
    if (v > 1.0) v = 1.0;
    if (v < -1.0) v = -1.0;
    return std::asin(v);
}

/// Gamma at positive half-integer arguments by exact recursion from
/// Gamma(1/2) = sqrt(pi) and Gamma(1) = 1. Accurate to a few ulp, which is
/// well inside the 1e-12 relative budget the bound formulas need.
inline double gamma_half_integer(double x) {
    double twice = 2.0 * x;
    if (x <= 0.0 || twice != std::floor(twice))
        throw DomainError("gamma_half_integer requires a positive half-integer, got " + std::to_string(x));
    double result = (std::floor(x) == x) ? 1.0 : std::sqrt(pi);
    for (double y = (std::floor(x) == x) ? 1.0 : 0.5; y < x - 0.25; y += 1.0)
        result *= y;
    return result;
}

/// Surface measure of the unit m-sphere S^m in R^{m+1}: 2 pi^{(m+1)/2} / Gamma((m+1)/2).
inline double unit_sphere_area(int m) {
    if (m < 0) throw DomainError("unit_sphere_area requires m >= 0");
    double half = (m + 1) / 2.0;
    return 2.0 * std::pow(pi, half) / gamma_half_integer(half);
}

}  // namespace kuratowski
