#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "kuratowski/errors.hpp"
#include "kuratowski/rng.hpp"
#include "kuratowski/special.hpp"

// Analytic geometry of the constant-curvature-1/100 model space. The model
// disk of radius 7*pi is realized as a geodesic ball on the round sphere of
// radius 10 in (n+1)-dimensional ambient space; every geodesic is a great
// circle, so all constructions below are closed-form.

namespace kuratowski {

inline constexpr double model_radius = 10.0;
inline constexpr double model_disk_radius = 7.0 * pi;

/// A point of the model space: ambient coordinates of Euclidean norm 10.
struct ModelPoint {
    std::vector<double> coords;

    std::size_t ambient_dim() const { return coords.size(); }
};

namespace detail {

inline double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline double norm(const std::vector<double>& a) { return std::sqrt(dot(a, a)); }

inline void axpy(std::vector<double>& y, double alpha, const std::vector<double>& x) {
    for (std::size_t i = 0; i < y.size(); ++i) y[i] += alpha * x[i];
}

inline void scale(std::vector<double>& v, double alpha) {
    for (auto& x : v) x *= alpha;
}

}  // namespace detail

/// Validating constructor: norm must equal 10 within 1e-12 relative.
inline ModelPoint make_model_point(std::vector<double> coords) {
    if (coords.size() < 2) throw DomainError("model point needs ambient dimension >= 2");
    double n = detail::norm(coords);
    if (std::abs(n - model_radius) > 1e-12 * model_radius)
        throw DomainError("model point norm " + std::to_string(n) + " is not 10 within 1e-12 relative");
    return ModelPoint{std::move(coords)};
}

/// Rescale an arbitrary nonzero direction onto the model sphere.
inline ModelPoint model_point_from_direction(std::vector<double> dir) {
    double n = detail::norm(dir);
    if (n == 0.0) throw DomainError("cannot normalize the zero vector");
    detail::scale(dir, model_radius / n);
    return ModelPoint{std::move(dir)};
}

/// Geodesic distance, 10 times the angle between the directions. Always in
/// [0, 10*pi]. Uses the half-angle form 2*atan2(|p-q|, |p+q|), which is
/// exact at coincident and antipodal pairs where the clamped-arc-cosine form
/// loses up to ~1e-7.
inline double model_distance(const ModelPoint& p, const ModelPoint& q) {
    double diff2 = 0.0, sum2 = 0.0;
    for (std::size_t i = 0; i < p.coords.size(); ++i) {
        double d = p.coords[i] - q.coords[i];
        double s = p.coords[i] + q.coords[i];
        diff2 += d * d;
        sum2 += s * s;
    }
    return 2.0 * model_radius * std::atan2(std::sqrt(diff2), std::sqrt(sum2));
}

/// Whether p lies in the model disk around the given center.
inline bool in_model_disk(const ModelPoint& p, const ModelPoint& center) {
    return model_distance(p, center) <= model_disk_radius;
}

/// Third side of a geodesic triangle from two sides and the included angle:
/// c = 10*acos(cos(a/10) cos(b/10) + sin(a/10) sin(b/10) cos(alpha)).
inline double law_of_cosines_side(double a, double b, double alpha) {
    if (a < 0.0 || a > model_radius * pi) throw DomainError("side a outside [0, 10*pi]");
    if (b < 0.0 || b > model_radius * pi) throw DomainError("side b outside [0, 10*pi]");
    if (alpha < 0.0 || alpha > pi) throw DomainError("angle alpha outside [0, pi]");
    double arg = std::cos(a / model_radius) * std::cos(b / model_radius) +
                 std::sin(a / model_radius) * std::sin(b / model_radius) * std::cos(alpha);
    return model_radius * checked_acos(arg);
}

/// Angle opposite the leg of length d in a right geodesic triangle whose
/// hypotenuse-adjacent side has length b (right angle at the foot of d):
/// beta = asin(sin(d/10) / sin(b/10)), in [0, pi/2].
inline double right_triangle_angle(double d, double b) {
    if (d < 0.0 || d > b) throw DomainError("leg d must satisfy 0 <= d <= b");
    if (b <= 0.0 || b >= model_radius * pi) throw DomainError("side b must lie in (0, 10*pi)");
    double ratio = std::sin(d / model_radius) / std::sin(b / model_radius);
    return checked_asin(ratio, 1e-12);
}

/// sin(t*x)/sin(x) extended continuously by t at x = 0. Non-decreasing on
/// [0, pi/2] for t in (0,1), with values in [t, sin(t*pi/2)].
inline double sine_ratio(double t, double x) {
    if (t <= 0.0 || t >= 1.0) throw DomainError("sine_ratio requires t in (0,1)");
    if (x < 0.0 || x > pi / 2.0) throw DomainError("sine_ratio requires x in [0, pi/2]");
    if (x == 0.0) return t;
    return std::sin(t * x) / std::sin(x);
}

/// The angle floor A(eps) = sin((1-eps) pi/2): the witness construction
/// guarantees cos(angle at x) <= -A(eps).
inline double angle_floor(double eps) {
    if (eps <= 0.0 || eps >= max_theory_eps)
        throw DomainError("angle_floor requires eps in (0, 4/(5*pi))");
    return std::sin((1.0 - eps) * pi / 2.0);
}

namespace detail {

/// Unit direction of p and the unit in-plane direction at p toward q.
/// Throws when the pair spans no unique great circle.
inline void geodesic_frame(const ModelPoint& p, const ModelPoint& q,
                           std::vector<double>& u, std::vector<double>& w) {
    u = p.coords;
    scale(u, 1.0 / model_radius);
    w = q.coords;
    axpy(w, -dot(q.coords, u), u);
    double n = norm(w);
    if (n < 1e-9 * model_radius)
        throw DegenerateGeodesic("points are coincident or antipodal; the great circle is not unique");
    scale(w, 1.0 / n);
}

}  // namespace detail

/// Point at arc length t from x along the great circle through x and y, on
/// the side opposite to y: with gamma(0) = x this is gamma(t), and y sits at
/// the negative parameter -d(x,y).
inline ModelPoint far_point(const ModelPoint& x, const ModelPoint& y, double t) {
    if (t < 0.0 || t >= model_radius * pi) throw DomainError("far_point requires t in [0, 10*pi)");
    std::vector<double> u, w;
    detail::geodesic_frame(x, y, u, w);  // validates the pair even when t = 0
    if (t == 0.0) return x;
    std::vector<double> out(u.size(), 0.0);
    detail::axpy(out, model_radius * std::cos(t / model_radius), u);
    detail::axpy(out, -model_radius * std::sin(t / model_radius), w);
    return ModelPoint{std::move(out)};
}

/// Angle at `at` between the geodesics toward p and toward q (tangent-vector
/// angle). Throws if either arc is degenerate.
inline double vertex_angle(const ModelPoint& at, const ModelPoint& p, const ModelPoint& q) {
    std::vector<double> u, tp, tq;
    detail::geodesic_frame(at, p, u, tp);
    detail::geodesic_frame(at, q, u, tq);
    double c = detail::dot(tp, tq);
    if (c > 1.0) c = 1.0;
    if (c < -1.0) c = -1.0;
    return std::acos(c);
}

/// Geodesic triangle bookkeeping for the witness construction: vertices
/// (x, y, s) with sides a = d(x,y), b = d(x,s), c = d(y,s) and angles
/// alpha at x, beta at y, gamma at s.
struct SphericalTriangle {
    double a, b, c;
    double alpha, beta, gamma;

    /// Residual of cos(c/10) = cos(a/10) cos(b/10) + sin(a/10) sin(b/10) cos(alpha)
    /// and its two cyclic counterparts; zero for an exact triangle.
    double law_of_cosines_residual() const {
        const double r = model_radius;
        double e1 = std::cos(c / r) -
                    (std::cos(a / r) * std::cos(b / r) + std::sin(a / r) * std::sin(b / r) * std::cos(alpha));
        double e2 = std::cos(b / r) -
                    (std::cos(a / r) * std::cos(c / r) + std::sin(a / r) * std::sin(c / r) * std::cos(beta));
        double e3 = std::cos(a / r) -
                    (std::cos(b / r) * std::cos(c / r) + std::sin(b / r) * std::sin(c / r) * std::cos(gamma));
        return std::max({std::abs(e1), std::abs(e2), std::abs(e3)});
    }
};

inline SphericalTriangle triangle_from_vertices(const ModelPoint& x, const ModelPoint& y,
                                                const ModelPoint& s) {
    SphericalTriangle t{};
    t.a = model_distance(x, y);
    t.b = model_distance(x, s);
    t.c = model_distance(y, s);
    t.alpha = vertex_angle(x, y, s);
    t.beta = vertex_angle(y, x, s);
    t.gamma = vertex_angle(s, x, y);
    return t;
}

/// Nearest point to s on the great circle through x and y; the geodesic from
/// s to the returned point meets the circle at a right angle. Returns s
/// itself when s already lies on the circle.
inline ModelPoint perpendicular_foot(const ModelPoint& s, const ModelPoint& x, const ModelPoint& y) {
    std::vector<double> u, w;
    detail::geodesic_frame(x, y, u, w);
    std::vector<double> proj(s.coords.size(), 0.0);
    detail::axpy(proj, detail::dot(s.coords, u), u);
    detail::axpy(proj, detail::dot(s.coords, w), w);
    double n = detail::norm(proj);
    if (n < 1e-9 * model_radius)
        throw AmbiguousFoot("point is a pole of the great circle; every foot is equidistant");
    std::vector<double> offplane = s.coords;
    detail::axpy(offplane, -1.0, proj);
    if (detail::norm(offplane) < 1e-9 * model_radius) return s;  // already on the circle
    detail::scale(proj, model_radius / n);
    ModelPoint z{std::move(proj)};
    // The right angle is guaranteed by the projection; a violation means a
    // logic bug, not rounding.
    ModelPoint along = far_point(z, x, model_radius * pi / 2.0);
    double ang = vertex_angle(z, s, along);
    if (std::abs(ang - pi / 2.0) > 1e-9)
        throw Error("perpendicular foot lost the right angle: " + std::to_string(ang));
    return z;
}

/// Witness margin d(y,s) - d(x,s) - (1-eps) d(x,y). Non-negative margin
/// certifies s as a witness for the pair (x, y) at level eps.
inline double check_witness(const ModelPoint& x, const ModelPoint& y, const ModelPoint& s,
                            double eps) {
    return model_distance(y, s) - model_distance(x, s) - (1.0 - eps) * model_distance(x, y);
}

/// Orthonormal basis of the tangent space at p (dimension ambient-1).
inline std::vector<std::vector<double>> tangent_basis(const ModelPoint& p) {
    std::size_t dim = p.ambient_dim();
    std::vector<std::vector<double>> basis;
    std::vector<double> u = p.coords;
    detail::scale(u, 1.0 / model_radius);
    basis.push_back(u);
    for (std::size_t i = 0; i < dim && basis.size() < dim; ++i) {
        std::vector<double> v(dim, 0.0);
        v[i] = 1.0;
        for (const auto& b : basis) detail::axpy(v, -detail::dot(v, b), b);
        double n = detail::norm(v);
        if (n > 1e-6) {
            detail::scale(v, 1.0 / n);
            basis.push_back(std::move(v));
        }
    }
    basis.erase(basis.begin());  // drop the radial direction
    return basis;
}

/// Geodesic exponential: walk arc length |v| from p in tangent direction v.
inline ModelPoint exp_map(const ModelPoint& p, const std::vector<double>& v) {
    double len = detail::norm(v);
    if (len == 0.0) return p;
    std::vector<double> out(p.coords.size(), 0.0);
    detail::axpy(out, std::cos(len / model_radius), p.coords);
    detail::axpy(out, model_radius * std::sin(len / model_radius) / len, v);
    return ModelPoint{std::move(out)};
}

/// Point of the open geodesic ball of radius `radius` around p: rejection
/// sampling in the tangent cube, then the exponential map. Uniformity is not
/// required by any caller, only membership in the ball.
inline ModelPoint random_ball_point(const ModelPoint& p, double radius, Rng& rng) {
    auto basis = tangent_basis(p);
    std::vector<double> coeff(basis.size());
    while (true) {
        double norm2 = 0.0;
        for (auto& c : coeff) {
            c = rng.uniform(-radius, radius);
            norm2 += c * c;
        }
        if (norm2 < radius * radius) break;
    }
    std::vector<double> v(p.ambient_dim(), 0.0);
    for (std::size_t i = 0; i < basis.size(); ++i) detail::axpy(v, coeff[i], basis[i]);
    return exp_map(p, v);
}

}  // namespace kuratowski
