#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "kuratowski/rng.hpp"
#include "kuratowski/special.hpp"
#include "kuratowski/spherical_kernel.hpp"

// Randomized verification suites for the model-space kernel. Each suite
// defines a margin whose sign certifies one step of the witness
// construction; a suite passes when its minimum margin stays above
// -tolerance. All suites are deterministic for a fixed seed.

namespace kuratowski {

struct SuiteResult {
    std::string name;
    std::uint64_t trials = 0;
    std::uint64_t violations = 0;
    double min_margin = std::numeric_limits<double>::infinity();
    double tolerance = 1e-9;
    bool pass = false;

    void record(double margin) {
        min_margin = std::min(min_margin, margin);
        if (margin < -tolerance) ++violations;
        ++trials;
    }
    void finish() { pass = violations == 0; }
};

namespace detail {

inline double positive_uniform(Rng& rng, double lo, double hi) {
    double v;
    do {
        v = rng.uniform(lo, hi);
    } while (v <= lo);
    return v;
}

}  // namespace detail

/// sin(t x)/sin(x) is non-decreasing on [0, pi/2]: checks consecutive grid
/// differences for a batch of random t in (0,1). Margin is the difference
/// itself (tolerance 0: the true increments dominate rounding).
inline SuiteResult suite_sine_ratio_monotone(std::size_t t_draws, std::size_t grid_points,
                                             std::uint64_t seed) {
    SuiteResult r;
    r.name = "sine-ratio-monotone";
    r.tolerance = 0.0;
    Rng rng(derive_seed(seed, 1));
    for (std::size_t k = 0; k < t_draws; ++k) {
        double t = detail::positive_uniform(rng, 0.0, 1.0);
        double prev = sine_ratio(t, 0.0);
        for (std::size_t i = 1; i < grid_points; ++i) {
            double x = (pi / 2.0) * static_cast<double>(i) / (grid_points - 1);
            double cur = sine_ratio(t, x);
            r.record(cur - prev);
            prev = cur;
        }
    }
    r.finish();
    return r;
}

/// Collinear identities of the third-side formula: alpha = pi gives a + b,
/// alpha = 0 gives |a - b|. Margin = -residual.
inline SuiteResult suite_collinear_identities(std::size_t trials, std::uint64_t seed) {
    SuiteResult r;
    r.name = "collinear-identities";
    Rng rng(derive_seed(seed, 2));
    for (std::size_t k = 0; k < trials; ++k) {
        double a = rng.uniform(0.0, 10.0 * pi);
        double b = rng.uniform(0.0, 10.0 * pi - a);
        double res_opposite = std::abs(law_of_cosines_side(a, b, pi) - (a + b));
        double res_same = std::abs(law_of_cosines_side(a, b, 0.0) - std::abs(a - b));
        r.record(-std::max(res_opposite, res_same));
    }
    r.finish();
    return r;
}

/// Triangles from random model points: the side/angle data must satisfy the
/// third-side identity in all three cyclic forms. Margin = -residual.
inline SuiteResult suite_triangle_consistency(std::size_t trials, int dim, std::uint64_t seed) {
    SuiteResult r;
    r.name = "triangle-consistency";
    Rng rng(derive_seed(seed, 3));
    auto random_point = [&] {
        return model_point_from_direction(rng.unit_vector(static_cast<std::size_t>(dim) + 1));
    };
    for (std::size_t k = 0; k < trials; ++k) {
        auto t = triangle_from_vertices(random_point(), random_point(), random_point());
        r.record(-t.law_of_cosines_residual());
    }
    r.finish();
    return r;
}

/// The angle-floor step of the witness construction: with a landmark within
/// delta of the far point and a right-angled foot, the angle alpha at x
/// satisfies cos(alpha) <= -A(eps). Margin = -A(eps) - cos(pi - beta).
inline SuiteResult suite_angle_floor(std::size_t trials, std::uint64_t seed) {
    SuiteResult r;
    r.name = "angle-floor";
    Rng rng(derive_seed(seed, 4));
    for (std::size_t k = 0; k < trials; ++k) {
        double eps = detail::positive_uniform(rng, 0.0, max_theory_eps);
        double delta = detail::positive_uniform(rng, 0.0, (5.0 * pi / 4.0) * eps);
        double d = rng.uniform(0.0, delta);
        double b = rng.uniform(5.0 * pi - 2.0 * delta, 5.0 * pi + 2.0 * delta);
        double beta = right_triangle_angle(d, b);
        r.record(-angle_floor(eps) - std::cos(pi - beta));
    }
    r.finish();
    return r;
}

/// The concluding comparison: whenever cos(alpha) <= -sine_ratio(1-eps, a/10),
/// the third side satisfies c >= (1-eps) a + b. Margin = c - ((1-eps) a + b).
inline SuiteResult suite_concluding_inequality(std::size_t trials, std::uint64_t seed) {
    SuiteResult r;
    r.name = "concluding-inequality";
    Rng rng(derive_seed(seed, 5));
    for (std::size_t k = 0; k < trials; ++k) {
        double a = detail::positive_uniform(rng, 0.0, 1.0);
        double b = rng.uniform(0.0, 5.0 * pi);
        double eps = detail::positive_uniform(rng, 0.0, max_theory_eps);
        double floor = sine_ratio(1.0 - eps, a / 10.0);
        double alpha = std::acos(rng.uniform(-1.0, -floor));
        double c = law_of_cosines_side(a, b, alpha);
        r.record(c - ((1.0 - eps) * a + b));
    }
    r.finish();
    return r;
}

/// End-to-end witness check: x the disk center, y at distance < 1, s
/// anywhere in the open delta-ball around the far point at arc 5*pi with
/// delta = (5*pi/4) eps. Margin = d(y,s) - d(x,s) - (1-eps) d(x,y).
inline SuiteResult suite_witness_monte_carlo(std::size_t trials, double eps, int dim,
                                             std::uint64_t seed) {
    SuiteResult r;
    r.name = "witness-monte-carlo";
    Rng rng(derive_seed(seed, 6));
    std::vector<double> center(static_cast<std::size_t>(dim) + 1, 0.0);
    center[0] = model_radius;
    ModelPoint x{center};
    double delta = (5.0 * pi / 4.0) * eps;
    auto basis = tangent_basis(x);
    for (std::size_t k = 0; k < trials; ++k) {
        double dist = detail::positive_uniform(rng, 0.0, 1.0);
        auto coeff = rng.unit_vector(basis.size());
        std::vector<double> v(x.ambient_dim(), 0.0);
        for (std::size_t i = 0; i < basis.size(); ++i)
            for (std::size_t c = 0; c < v.size(); ++c) v[c] += dist * coeff[i] * basis[i][c];
        ModelPoint y = exp_map(x, v);
        ModelPoint far = far_point(x, y, 5.0 * pi);
        ModelPoint s = random_ball_point(far, delta, rng);
        r.record(check_witness(x, y, s, eps));
    }
    r.finish();
    return r;
}

/// The full kernel battery with one shared master seed.
inline std::vector<SuiteResult> run_model_suites(std::size_t trials, double eps, int dim,
                                                 std::uint64_t seed) {
    std::vector<SuiteResult> out;
    out.push_back(suite_sine_ratio_monotone(std::max<std::size_t>(1, trials / 100), 1000, seed));
    out.push_back(suite_collinear_identities(trials, seed));
    out.push_back(suite_triangle_consistency(trials, dim, seed));
    out.push_back(suite_angle_floor(trials, seed));
    out.push_back(suite_concluding_inequality(trials, seed));
    out.push_back(suite_witness_monte_carlo(trials, eps, dim, seed));
    return out;
}

}  // namespace kuratowski
