#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "kuratowski/io.hpp"
#include "kuratowski/metric_space.hpp"
#include "kuratowski/rng.hpp"
#include "kuratowski/special.hpp"

using namespace kuratowski;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
    auto path = std::filesystem::temp_directory_path() / ("kuratowski_test_" + name);
    std::ofstream out(path, std::ios::binary);
    out << content;
    return path;
}

PointSample circle_matrix_sample(std::size_t n, double circumference) {
    MatrixOracle m;
    m.n = n;
    m.entries.assign(n * n, 0.0);
    double step = circumference / n;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::size_t k = i > j ? i - j : j - i;
            m.entries[i * n + j] = step * std::min(k, n - k);
        }
    PointSample s;
    s.oracle = std::move(m);
    s.label = "circle";
    return s;
}

}  // namespace

TEST_CASE("flat torus distance wraps around", "[metric]") {
    PointSample s;
    s.points = {{0.1, 0.1}, {0.9, 0.1}};
    s.oracle = FlatTorusOracle{{1.0, 1.0}};
    REQUIRE_THAT(s.distance(0, 1), WithinAbs(0.2, 1e-15));
    REQUIRE(s.distance(0, 1) == s.distance(1, 0));
}

TEST_CASE("sphere oracle endpoints", "[metric]") {
    PointSample s;
    s.points = {{10.0, 0.0, 0.0}, {-10.0, 0.0, 0.0}, {0.0, 10.0, 0.0}};
    s.oracle = SphereOracle{10.0};
    REQUIRE_THAT(s.distance(0, 1), WithinRel(10.0 * pi, 1e-15));
    REQUIRE_THAT(s.distance(0, 2), WithinRel(5.0 * pi, 1e-15));
    REQUIRE(s.distance(1, 1) == 0.0);
}

TEST_CASE("matrix oracle is verbatim lookup", "[metric]") {
    PointSample s;
    s.oracle = MatrixOracle{2, {0.0, 1.25, 1.25, 0.0}};
    REQUIRE(s.distance(0, 1) == 1.25);
    REQUIRE(s.size() == 2);
    REQUIRE_THROWS_AS(s.distance(0, 2), DomainError);
}

TEST_CASE("torus grid fixtures", "[metric]") {
    SECTION("2x2 unit grid") {
        auto s = sample_torus_grid({1.0, 1.0}, 2);
        REQUIRE(s.size() == 4);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = i + 1; j < 4; ++j) {
                double d = s.distance(i, j);
                bool axis = std::abs(d - 0.5) < 1e-15;
                bool diag = std::abs(d - std::sqrt(0.5)) < 1e-15;
                REQUIRE((axis || diag));
            }
    }
    SECTION("grid pitch is the nearest-neighbor spacing") {
        auto s = sample_torus_grid({1.0, 1.0}, 60);
        REQUIRE(s.size() == 3600);
        // lattice symmetry: checking a corner, an edge and an interior point
        for (std::size_t i : {std::size_t{0}, std::size_t{59}, std::size_t{1830}}) {
            double nn = std::numeric_limits<double>::infinity();
            for (std::size_t j = 0; j < s.size(); ++j)
                if (j != i) nn = std::min(nn, s.distance(i, j));
            REQUIRE_THAT(nn, WithinRel(1.0 / 60.0, 1e-12));
        }
    }
    SECTION("diameter of the unit square torus") {
        auto s = sample_torus_grid({1.0, 1.0}, 12);
        double diam = 0.0;
        for (std::size_t i = 0; i < s.size(); ++i)
            for (std::size_t j = i + 1; j < s.size(); ++j) diam = std::max(diam, s.distance(i, j));
        REQUIRE(diam <= std::sqrt(0.5) + 1e-12);
        REQUIRE_THAT(diam, WithinRel(std::sqrt(0.5), 1e-9));
    }
    SECTION("volume metadata is the period product") {
        auto s = sample_torus_grid({1.0, 2.0}, 3);
        REQUIRE(s.volume == 2.0);
        REQUIRE(s.sec_sup == 0.0);
    }
}

TEST_CASE("sphere sampler", "[metric]") {
    SECTION("single point") {
        auto s = sample_sphere(2, 10.0, 1, 7);
        REQUIRE(s.size() == 1);
        REQUIRE(s.distance(0, 0) == 0.0);
    }
    SECTION("determinism") {
        auto a = sample_sphere(2, 10.0, 50, 42);
        auto b = sample_sphere(2, 10.0, 50, 42);
        auto c = sample_sphere(2, 10.0, 50, 43);
        REQUIRE(a.points == b.points);
        REQUIRE(a.points != c.points);
    }
    SECTION("points live on the sphere") {
        auto s = sample_sphere(3, 2.5, 200, 1);
        for (const auto& p : s.points) {
            double n2 = 0.0;
            for (double x : p) n2 += x * x;
            REQUIRE_THAT(std::sqrt(n2), WithinAbs(2.5, 1e-9));
        }
        REQUIRE_THAT(*s.sec_sup, WithinRel(1.0 / 6.25, 1e-15));
    }
    SECTION("mean pairwise distance approaches (pi/2) R") {
        auto s = sample_sphere(2, 10.0, 2500, 2024);
        double sum = 0.0;
        std::uint64_t count = 0;
        for (std::size_t i = 0; i < s.size(); ++i)
            for (std::size_t j = i + 1; j < s.size(); ++j) {
                sum += s.distance(i, j);
                ++count;
            }
        REQUIRE_THAT(sum / count, WithinRel(5.0 * pi, 0.02));
    }
}

TEST_CASE("torus random sampler stays in range", "[metric]") {
    auto s = sample_torus_random({1.0, 3.0}, 500, 9);
    for (const auto& p : s.points) {
        REQUIRE(p[0] >= 0.0);
        REQUIRE(p[0] < 1.0);
        REQUIRE(p[1] >= 0.0);
        REQUIRE(p[1] < 3.0);
    }
    auto again = sample_torus_random({1.0, 3.0}, 500, 9);
    REQUIRE(s.points == again.points);
}

TEST_CASE("graph metric on a path", "[metric]") {
    std::vector<std::vector<double>> pts = {{0.0}, {1.0}, {2.0}};
    auto s = build_graph_metric(pts, 1);
    REQUIRE_THAT(s.distance(0, 2), WithinAbs(2.0, 1e-12));
}

TEST_CASE("graph metric reports disconnection", "[metric]") {
    std::vector<std::vector<double>> pts = {{0.0, 0.0}, {0.1, 0.0}, {10.0, 0.0}, {10.1, 0.0}};
    try {
        build_graph_metric(pts, 1);
        FAIL("expected DisconnectedGraph");
    } catch (const DisconnectedGraph& e) {
        REQUIRE(std::string(e.what()).find("2 components") != std::string::npos);
    }
}

TEST_CASE("graph geodesics approximate circle arcs", "[metric]") {
    std::size_t n = 600;
    std::vector<std::vector<double>> pts;
    for (std::size_t i = 0; i < n; ++i) {
        double a = 2.0 * pi * i / n;
        pts.push_back({std::cos(a), std::sin(a)});
    }
    auto s = build_graph_metric(pts, 8);
    for (std::size_t i : {std::size_t{0}, std::size_t{123}, std::size_t{401}}) {
        std::size_t j = (i + n / 2) % n;
        REQUIRE_THAT(s.distance(i, j), WithinRel(pi, 0.05));
    }
}

TEST_CASE("graph distance dominates the Euclidean distance", "[metric]") {
    Rng rng(4);
    std::vector<std::vector<double>> pts;
    for (int i = 0; i < 120; ++i) pts.push_back({rng.uniform(), rng.uniform(), rng.uniform()});
    auto s = build_graph_metric(pts, 6);
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            REQUIRE(s.distance(i, j) >= euclidean(s.points[i], s.points[j]) - 1e-12);
}

TEST_CASE("metric axioms hold for every oracle variant", "[metric]") {
    auto sphere = sample_sphere(2, 10.0, 150, 3);
    auto torus = sample_torus_grid({1.0, 2.0}, 10);
    auto circle = circle_matrix_sample(120, 2.0 * pi);
    Rng rng(77);
    std::vector<std::vector<double>> pts;
    for (int i = 0; i < 100; ++i) pts.push_back({rng.uniform(), rng.uniform()});
    auto graph = build_graph_metric(pts, 5);

    for (const auto* s : {&sphere, &torus, &circle, &graph})
        REQUIRE(check_metric_axioms(*s, 10000, 99) >= -1e-9);
}

TEST_CASE("torus translation invariance is exact on dyadic coordinates", "[metric]") {
    // Integer-period translations of dyadic coordinates reduce exactly, so
    // the distances agree bitwise.
    std::vector<std::vector<double>> base = {{0.25, 0.125}, {0.75, 0.625}, {0.5, 0.0625}};
    PointSample a;
    a.points = base;
    a.oracle = FlatTorusOracle{{1.0, 1.0}};
    PointSample b = a;
    for (auto& p : b.points) {
        p[0] = reduce_mod(p[0] + 3.0, 1.0);
        p[1] = reduce_mod(p[1] - 2.0, 1.0);
    }
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) REQUIRE(a.distance(i, j) == b.distance(i, j));
}

TEST_CASE("sphere distance is rotation invariant", "[metric]") {
    auto s = sample_sphere(2, 10.0, 40, 5);
    // rotate every point by the same product of Givens rotations
    auto rotated = s;
    double c01 = std::cos(0.7), s01 = std::sin(0.7);
    double c12 = std::cos(-1.2), s12 = std::sin(-1.2);
    for (auto& p : rotated.points) {
        double x = c01 * p[0] - s01 * p[1], y = s01 * p[0] + c01 * p[1];
        p[0] = x;
        p[1] = y;
        double yy = c12 * p[1] - s12 * p[2], z = s12 * p[1] + c12 * p[2];
        p[1] = yy;
        p[2] = z;
    }
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            REQUIRE_THAT(rotated.distance(i, j), WithinAbs(s.distance(i, j), 1e-9));
}

TEST_CASE("point cloud loading", "[metric][io]") {
    SECTION("csv with header") {
        auto p = temp_file("pts.csv", "x,y\n0,0\n1,0\n0,1\n");
        auto s = load_points(p.string());
        REQUIRE(s.size() == 3);
        REQUIRE_THAT(s.distance(1, 2), WithinRel(std::sqrt(2.0), 1e-15));
    }
    SECTION("csv without header") {
        auto p = temp_file("pts2.csv", "0,0\n3,4\n");
        auto s = load_points(p.string());
        REQUIRE_THAT(s.distance(0, 1), WithinAbs(5.0, 1e-15));
    }
    SECTION("json array of arrays") {
        auto p = temp_file("pts.json", "[[0,0],[1,1]]");
        auto s = load_points(p.string(), PointFormat::json);
        REQUIRE_THAT(s.distance(0, 1), WithinRel(std::sqrt(2.0), 1e-15));
    }
    SECTION("empty file") {
        auto p = temp_file("empty.csv", "");
        REQUIRE_THROWS_AS(load_points(p.string()), ParseError);
    }
    SECTION("bad field names the line") {
        auto p = temp_file("bad.csv", "0,0\n1,zebra\n");
        try {
            load_points(p.string());
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            REQUIRE(std::string(e.what()).find(":2:") != std::string::npos);
        }
    }
    SECTION("ragged rows rejected") {
        auto p = temp_file("ragged.csv", "0,0\n1\n");
        REQUIRE_THROWS_AS(load_points(p.string()), ParseError);
    }
    SECTION("missing file") {
        REQUIRE_THROWS_AS(load_points("/nonexistent/file.csv"), IoError);
    }
}

TEST_CASE("distance matrix loading", "[metric][io]") {
    SECTION("valid 2x2") {
        auto p = temp_file("m.csv", "0,1\n1,0\n");
        auto s = load_matrix(p.string());
        REQUIRE(s.size() == 2);
        REQUIRE(s.distance(0, 1) == 1.0);
    }
    SECTION("triangle violation names the triple") {
        auto p = temp_file("mv.csv", "0,1,5\n1,0,1\n5,1,0\n");
        try {
            load_matrix(p.string());
            FAIL("expected MetricViolation");
        } catch (const MetricViolation& e) {
            REQUIRE(e.i == 0);
            REQUIRE(e.j == 1);
            REQUIRE(e.k == 2);
        }
    }
    SECTION("asymmetry rejected") {
        auto p = temp_file("asym.csv", "0,1\n2,0\n");
        REQUIRE_THROWS_AS(load_matrix(p.string()), MetricViolation);
    }
    SECTION("nonzero diagonal rejected") {
        auto p = temp_file("diag.csv", "1,1\n1,0\n");
        REQUIRE_THROWS_AS(load_matrix(p.string()), MetricViolation);
    }
    SECTION("non-square rejected") {
        auto p = temp_file("rect.csv", "0,1,2\n1,0,1\n");
        REQUIRE_THROWS_AS(load_matrix(p.string()), ParseError);
    }
}
