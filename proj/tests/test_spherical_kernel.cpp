#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "kuratowski/model_suites.hpp"
#include "kuratowski/rng.hpp"
#include "kuratowski/special.hpp"
#include "kuratowski/spherical_kernel.hpp"

using namespace kuratowski;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

ModelPoint axis_point(std::size_t dim, std::size_t axis, double sign = 1.0) {
    std::vector<double> c(dim, 0.0);
    c[axis] = sign * model_radius;
    return ModelPoint{c};
}

ModelPoint random_point(Rng& rng, std::size_t dim = 3) {
    return model_point_from_direction(rng.unit_vector(dim));
}

}  // namespace

TEST_CASE("model point validation", "[kernel]") {
    REQUIRE_NOTHROW(make_model_point({10.0, 0.0, 0.0}));
    REQUIRE_THROWS_AS(make_model_point({10.0 + 1e-6, 0.0, 0.0}), DomainError);
    REQUIRE_THROWS_AS(make_model_point({0.0, 0.0, 0.0}), DomainError);
    REQUIRE_THROWS_AS(make_model_point({10.0}), DomainError);

    auto p = model_point_from_direction({3.0, 4.0, 0.0});
    REQUIRE_THAT(std::hypot(p.coords[0], p.coords[1], p.coords[2]), WithinRel(10.0, 1e-15));
    REQUIRE_THROWS_AS(model_point_from_direction({0.0, 0.0, 0.0}), DomainError);
}

TEST_CASE("model distance endpoints", "[kernel]") {
    auto e0 = axis_point(3, 0);
    auto e1 = axis_point(3, 1);
    auto anti = axis_point(3, 0, -1.0);

    REQUIRE(model_distance(e0, e0) == 0.0);
    REQUIRE(model_distance(e0, anti) == 10.0 * pi);
    REQUIRE_THAT(model_distance(e0, e1), WithinRel(5.0 * pi, 1e-15));

    Rng rng(91);
    for (int k = 0; k < 1000; ++k) {
        auto p = random_point(rng);
        auto q = random_point(rng);
        double d = model_distance(p, q);
        REQUIRE(d >= 0.0);
        REQUIRE(d <= 10.0 * pi);
        REQUIRE(model_distance(q, p) == d);
        REQUIRE(model_distance(p, p) == 0.0);
    }
}

TEST_CASE("model distance triangle inequality", "[kernel]") {
    Rng rng(17);
    for (int k = 0; k < 2000; ++k) {
        auto a = random_point(rng);
        auto b = random_point(rng);
        auto c = random_point(rng);
        REQUIRE(model_distance(a, c) <= model_distance(a, b) + model_distance(b, c) + 1e-9);
    }
}

TEST_CASE("third side via included angle", "[kernel]") {
    SECTION("collinear identities") {
        REQUIRE_THAT(law_of_cosines_side(2.0, 3.0, pi), WithinAbs(5.0, 1e-9));
        REQUIRE_THAT(law_of_cosines_side(2.0, 3.0, 0.0), WithinAbs(1.0, 1e-9));
    }
    SECTION("quarter-circle legs reduce to the angle") {
        for (double alpha : {0.1, 0.7, 1.3, 2.9})
            REQUIRE_THAT(law_of_cosines_side(5.0 * pi, 5.0 * pi, alpha),
                         WithinRel(10.0 * alpha, 1e-12));
    }
    SECTION("domain") {
        REQUIRE_THROWS_AS(law_of_cosines_side(-0.1, 1.0, 1.0), DomainError);
        REQUIRE_THROWS_AS(law_of_cosines_side(1.0, 10.0 * pi + 0.1, 1.0), DomainError);
        REQUIRE_THROWS_AS(law_of_cosines_side(1.0, 1.0, 3.2), DomainError);
        REQUIRE_THROWS_AS(law_of_cosines_side(1.0, 1.0, -0.1), DomainError);
    }
}

TEST_CASE("right-triangle angle from leg and hypotenuse", "[kernel]") {
    REQUIRE(right_triangle_angle(0.0, 5.0) == 0.0);
    REQUIRE_THAT(right_triangle_angle(5.0, 5.0), WithinAbs(pi / 2.0, 1e-12));
    // frozen oracle: asin(sin(0.01)/cos(0.02))
    double expected = std::asin(std::sin(0.01) / std::cos(0.02));
    REQUIRE_THAT(right_triangle_angle(0.1, 5.0 * pi - 0.2), WithinRel(expected, 1e-12));

    REQUIRE_THROWS_AS(right_triangle_angle(1.0, 0.5), DomainError);      // d > b
    REQUIRE_THROWS_AS(right_triangle_angle(1.0, 10.0 * pi), DomainError);
    REQUIRE_THROWS_AS(right_triangle_angle(5.0 * pi, 9.0 * pi), DomainError);  // ratio > 1
}

TEST_CASE("sine ratio and its limit", "[kernel]") {
    REQUIRE(sine_ratio(0.3, 0.0) == 0.3);
    REQUIRE_THAT(sine_ratio(0.5, pi / 2.0), WithinRel(std::sqrt(2.0) / 2.0, 1e-15));
    REQUIRE(sine_ratio(0.5, 0.3) <= sine_ratio(0.5, 1.2));

    SECTION("range of values") {
        Rng rng(5);
        for (int k = 0; k < 100; ++k) {
            double t = 0.01 + 0.98 * rng.uniform();
            for (int i = 0; i <= 50; ++i) {
                double x = (pi / 2.0) * i / 50.0;
                double v = sine_ratio(t, x);
                REQUIRE(v >= t - 1e-12);
                REQUIRE(v <= std::sin(t * pi / 2.0) + 1e-12);
            }
        }
    }
    SECTION("domain") {
        REQUIRE_THROWS_AS(sine_ratio(0.0, 0.5), DomainError);
        REQUIRE_THROWS_AS(sine_ratio(1.0, 0.5), DomainError);
        REQUIRE_THROWS_AS(sine_ratio(0.5, -0.1), DomainError);
        REQUIRE_THROWS_AS(sine_ratio(0.5, pi), DomainError);
    }
}

TEST_CASE("angle floor", "[kernel]") {
    REQUIRE_THAT(angle_floor(1e-12), WithinAbs(1.0, 1e-9));
    REQUIRE_THAT(angle_floor(0.2), WithinRel(0.9510565162951535, 1e-12));
    REQUIRE_THAT(angle_floor(0.25), WithinRel(0.9238795325112867, 1e-12));
    REQUIRE_THROWS_AS(angle_floor(0.0), DomainError);
    REQUIRE_THROWS_AS(angle_floor(0.26), DomainError);  // above 4/(5*pi)
    REQUIRE_THROWS_AS(angle_floor(-0.1), DomainError);
}

TEST_CASE("far point walks the opposite ray", "[kernel]") {
    Rng rng(23);
    auto x = axis_point(3, 0);
    auto y = exp_map(x, {0.0, 0.5, 0.0});  // d(x,y) = 0.5

    REQUIRE(far_point(x, y, 0.0).coords == x.coords);

    SECTION("arc-length parametrization") {
        for (double t : {0.5, 3.0, 5.0 * pi, 9.9 * pi}) {
            auto z = far_point(x, y, t);
            REQUIRE_THAT(model_distance(x, z), WithinAbs(t, 1e-9));
        }
    }
    SECTION("additivity past x") {
        auto z = far_point(x, y, 5.0 * pi);
        REQUIRE_THAT(model_distance(y, z), WithinAbs(5.0 * pi + 0.5, 1e-9));
    }
    SECTION("random pairs") {
        for (int k = 0; k < 300; ++k) {
            auto p = random_point(rng);
            auto q = random_point(rng);
            double t = rng.uniform(0.0, 9.0 * pi);
            auto z = far_point(p, q, t);
            REQUIRE_THAT(model_distance(p, z), WithinAbs(t, 1e-8));
        }
    }
    SECTION("degenerate pairs") {
        REQUIRE_THROWS_AS(far_point(x, x, 1.0), DegenerateGeodesic);
        REQUIRE_THROWS_AS(far_point(x, axis_point(3, 0, -1.0), 1.0), DegenerateGeodesic);
        REQUIRE_THROWS_AS(far_point(x, y, 10.0 * pi), DomainError);
        REQUIRE_THROWS_AS(far_point(x, y, -0.1), DomainError);
    }
}

TEST_CASE("perpendicular foot", "[kernel]") {
    auto x = axis_point(3, 0);
    auto y = axis_point(3, 1);

    SECTION("point on the circle returns itself") {
        auto on = far_point(x, y, 2.0);
        auto z = perpendicular_foot(on, x, y);
        REQUIRE(z.coords == on.coords);
    }
    SECTION("pole is ambiguous") {
        REQUIRE_THROWS_AS(perpendicular_foot(axis_point(3, 2), x, y), AmbiguousFoot);
    }
    SECTION("foot is nearest, right-angled, and close to the anchor") {
        Rng rng(37);
        for (int k = 0; k < 500; ++k) {
            auto yy = exp_map(x, {0.0, rng.uniform(0.05, 0.9), 0.0});
            auto anchor = far_point(x, yy, 5.0 * pi);
            double delta = rng.uniform(0.05, 1.0);
            auto s = random_ball_point(anchor, delta, rng);
            double ds_anchor = model_distance(s, anchor);
            if (ds_anchor < 1e-6) continue;  // too close to the circle for angle checks
            auto z = perpendicular_foot(s, x, yy);
            // nearest point on the circle, so no farther than the anchor
            REQUIRE(model_distance(s, z) <= ds_anchor + 1e-9);
            // within twice the anchor distance along the circle
            REQUIRE(model_distance(z, anchor) <= 2.0 * ds_anchor + 1e-9);
            // right angle between the circle and the geodesic to s
            if (model_distance(s, z) > 1e-6) {
                double ang = vertex_angle(z, s, x);
                REQUIRE_THAT(ang, WithinAbs(pi / 2.0, 1e-9));
            }
        }
    }
}

TEST_CASE("witness margin", "[kernel]") {
    auto x = axis_point(3, 0);
    auto y = exp_map(x, {0.0, 0.7, 0.0});
    double eps = 0.2;

    SECTION("collinear far landmark certifies with margin eps*d") {
        auto s = far_point(x, y, 5.0 * pi);
        REQUIRE_THAT(check_witness(x, y, s, eps), WithinAbs(eps * 0.7, 1e-9));
    }
    SECTION("the pair's own endpoint is no witness") {
        REQUIRE(check_witness(x, y, y, eps) < 0.0);
    }
}

TEST_CASE("triangle data is self-consistent", "[kernel]") {
    Rng rng(7);
    auto t = triangle_from_vertices(random_point(rng), random_point(rng), random_point(rng));
    REQUIRE(t.law_of_cosines_residual() <= 1e-9);
    REQUIRE(t.a >= 0.0);
    REQUIRE(t.alpha >= 0.0);
    REQUIRE(t.alpha <= pi);
}

TEST_CASE("kernel suites pass at unit-test scale", "[kernel][suites]") {
    REQUIRE(suite_sine_ratio_monotone(20, 1000, 1).pass);
    REQUIRE(suite_collinear_identities(2000, 2).pass);
    REQUIRE(suite_triangle_consistency(2000, 2, 3).pass);
    REQUIRE(suite_angle_floor(2000, 4).pass);
    REQUIRE(suite_concluding_inequality(2000, 5).pass);
    REQUIRE(suite_witness_monte_carlo(2000, 0.2, 2, 6).pass);
}

TEST_CASE("witness suite in higher ambient dimension", "[kernel][suites]") {
    REQUIRE(suite_witness_monte_carlo(500, 0.15, 4, 8).pass);
    REQUIRE(suite_triangle_consistency(500, 4, 9).pass);
}

TEST_CASE("ball sampling stays in the ball and the disk", "[kernel]") {
    Rng rng(11);
    auto center = axis_point(4, 0);
    for (int k = 0; k < 300; ++k) {
        auto s = random_ball_point(center, 0.8, rng);
        REQUIRE(model_distance(center, s) < 0.8 + 1e-12);
        REQUIRE(in_model_disk(s, center));
    }
}
