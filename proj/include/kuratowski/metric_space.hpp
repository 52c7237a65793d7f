#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <queue>
#include <string>
#include <variant>
#include <vector>

#include "kuratowski/errors.hpp"
#include "kuratowski/rng.hpp"
#include "kuratowski/special.hpp"

// Finite samples of metric spaces with pluggable distance oracles. A sample
// is immutable after construction; the verification pipeline treats the
// sample itself as the metric space under test.

namespace kuratowski {

/// Points on the sphere of the given radius; geodesic distance.
struct SphereOracle {
    double radius;
};

/// Flat torus with one period per axis; distance is the Euclidean norm of
/// the per-axis minimal residues.
struct FlatTorusOracle {
    std::vector<double> periods;
};

/// Explicit symmetric distance matrix, row-major.
struct MatrixOracle {
    std::size_t n = 0;
    std::vector<double> entries;

    double at(std::size_t i, std::size_t j) const { return entries[i * n + j]; }
};

/// Shortest-path table of a symmetric k-NN graph with Euclidean weights.
struct GraphOracle {
    int k = 0;
    std::size_t n = 0;
    std::vector<double> table;
};

using DistanceOracle = std::variant<SphereOracle, FlatTorusOracle, MatrixOracle, GraphOracle>;

struct PointSample {
    std::string label;
    std::vector<std::vector<double>> points;  // empty for matrix-only spaces
    DistanceOracle oracle;
    double scale = 1.0;

    // Manifold metadata when the sample comes from an analytic model;
    // matrix/graph spaces leave these unset and the caller supplies them.
    std::optional<double> sec_sup;
    std::optional<double> volume;
    std::optional<int> manifold_dim;

    std::size_t size() const {
        if (const auto* m = std::get_if<MatrixOracle>(&oracle)) return m->n;
        if (const auto* g = std::get_if<GraphOracle>(&oracle)) return g->n;
        return points.size();
    }

    double distance(std::size_t i, std::size_t j) const {
        std::size_t n = size();
        if (i >= n || j >= n)
            throw DomainError("point index out of range: " + std::to_string(i) + "," +
                              std::to_string(j) + " for sample of size " + std::to_string(n));
        if (i == j) return 0.0;
        double d = std::visit(
            [&](const auto& o) { return raw_distance(o, i, j); }, oracle);
        return scale * d;
    }

private:
    double raw_distance(const SphereOracle& o, std::size_t i, std::size_t j) const {
        const auto& u = points[i];
        const auto& v = points[j];
        double dot = 0.0;
        for (std::size_t a = 0; a < u.size(); ++a) dot += u[a] * v[a];
        double c = dot / (o.radius * o.radius);
        if (c > 1.0) c = 1.0;
        if (c < -1.0) c = -1.0;
        return o.radius * std::acos(c);
    }

    double raw_distance(const FlatTorusOracle& o, std::size_t i, std::size_t j) const {
        const auto& u = points[i];
        const auto& v = points[j];
        double sum2 = 0.0;
        for (std::size_t a = 0; a < u.size(); ++a) {
            double r = std::abs(u[a] - v[a]);
            r = std::min(r, o.periods[a] - r);
            sum2 += r * r;
        }
        return std::sqrt(sum2);
    }

    double raw_distance(const MatrixOracle& o, std::size_t i, std::size_t j) const {
        return o.at(i, j);
    }

    double raw_distance(const GraphOracle& o, std::size_t i, std::size_t j) const {
        return o.table[i * o.n + j];
    }
};

inline double euclidean(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        double d = a[i] - b[i];
        s += d * d;
    }
    return std::sqrt(s);
}

/// count points uniform on the sphere of dimension `dim` (ambient dim+1),
/// radius R: normalized standard Gaussian vectors. Deterministic per seed.
inline PointSample sample_sphere(int dim, double radius, std::size_t count, std::uint64_t seed) {
    if (dim < 2) throw DomainError("sample_sphere requires sphere dimension >= 2");
    if (radius <= 0.0) throw DomainError("sample_sphere requires radius > 0");
    if (count < 1) throw DomainError("sample_sphere requires count >= 1");
    Rng rng(derive_seed(seed, 0x5f));
    PointSample s;
    s.points.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        auto dir = rng.unit_vector(static_cast<std::size_t>(dim) + 1);
        for (auto& x : dir) x *= radius;
        s.points.push_back(std::move(dir));
    }
    s.oracle = SphereOracle{radius};
    s.sec_sup = 1.0 / (radius * radius);
    s.volume = unit_sphere_area(dim) * std::pow(radius, dim);
    s.manifold_dim = dim;
    s.label = "sphere(dim=" + std::to_string(dim) + ",R=" + std::to_string(radius) +
              ",count=" + std::to_string(count) + ")";
    return s;
}

inline double reduce_mod(double x, double period) {
    double r = x - period * std::floor(x / period);
    return (r == period) ? 0.0 : r;
}

namespace detail {

inline PointSample finish_torus(PointSample s, const std::vector<double>& periods) {
    double vol = 1.0;
    for (double p : periods) vol *= p;
    s.oracle = FlatTorusOracle{periods};
    s.sec_sup = 0.0;
    s.volume = vol;
    s.manifold_dim = static_cast<int>(periods.size());
    return s;
}

}  // namespace detail

/// Regular grid with `resolution` subdivisions per axis, lexicographic order;
/// point coordinates are i * period / resolution.
inline PointSample sample_torus_grid(const std::vector<double>& periods, int resolution) {
    if (periods.empty()) throw DomainError("torus needs at least one period");
    for (double p : periods)
        if (p <= 0.0) throw DomainError("torus periods must be positive");
    if (resolution < 1) throw DomainError("grid resolution must be >= 1");
    std::size_t dim = periods.size();
    std::size_t total = 1;
    for (std::size_t a = 0; a < dim; ++a) total *= static_cast<std::size_t>(resolution);
    PointSample s;
    s.points.reserve(total);
    std::vector<int> idx(dim, 0);
    for (std::size_t p = 0; p < total; ++p) {
        std::vector<double> pt(dim);
        for (std::size_t a = 0; a < dim; ++a) pt[a] = idx[a] * periods[a] / resolution;
        s.points.push_back(std::move(pt));
        for (std::size_t a = dim; a-- > 0;) {
            if (++idx[a] < resolution) break;
            idx[a] = 0;
        }
    }
    s.label = "torus-grid(res=" + std::to_string(resolution) + ")";
    return detail::finish_torus(std::move(s), periods);
}

/// count uniform random points on the torus. Deterministic per seed.
inline PointSample sample_torus_random(const std::vector<double>& periods, std::size_t count,
                                       std::uint64_t seed) {
    if (periods.empty()) throw DomainError("torus needs at least one period");
    for (double p : periods)
        if (p <= 0.0) throw DomainError("torus periods must be positive");
    if (count < 1) throw DomainError("sample_torus_random requires count >= 1");
    Rng rng(derive_seed(seed, 0x7a));
    PointSample s;
    s.points.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        std::vector<double> pt(periods.size());
        for (std::size_t a = 0; a < periods.size(); ++a)
            pt[a] = reduce_mod(rng.uniform(0.0, periods[a]), periods[a]);
        s.points.push_back(std::move(pt));
    }
    s.label = "torus-random(count=" + std::to_string(count) + ")";
    return detail::finish_torus(std::move(s), periods);
}

/// Point cloud under the plain Euclidean metric, stored as an explicit
/// matrix. Quadratic memory; meant for desk-scale clouds.
inline PointSample euclidean_sample(std::vector<std::vector<double>> points, std::string label) {
    std::size_t n = points.size();
    MatrixOracle m;
    m.n = n;
    m.entries.assign(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            double d = euclidean(points[i], points[j]);
            m.entries[i * n + j] = d;
            m.entries[j * n + i] = d;
        }
    PointSample s;
    s.points = std::move(points);
    s.oracle = std::move(m);
    s.label = std::move(label);
    return s;
}

namespace detail {

inline std::vector<double> dijkstra(const std::vector<std::vector<std::pair<std::size_t, double>>>& adj,
                                    std::size_t src) {
    const double inf = std::numeric_limits<double>::infinity();
    std::vector<double> dist(adj.size(), inf);
    using Item = std::pair<double, std::size_t>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    dist[src] = 0.0;
    heap.emplace(0.0, src);
    while (!heap.empty()) {
        auto [d, u] = heap.top();
        heap.pop();
        if (d > dist[u]) continue;
        for (auto [v, w] : adj[u]) {
            double nd = d + w;
            if (nd < dist[v]) {
                dist[v] = nd;
                heap.emplace(nd, v);
            }
        }
    }
    return dist;
}

}  // namespace detail

/// Symmetric k-NN graph with Euclidean edge weights and its full
/// shortest-path table. Throws DisconnectedGraph naming the components when
/// the graph does not connect.
inline PointSample build_graph_metric(std::vector<std::vector<double>> points, int k) {
    std::size_t n = points.size();
    if (k < 1) throw DomainError("build_graph_metric requires k >= 1");
    if (n < 2) throw DomainError("build_graph_metric requires at least 2 points");

    std::vector<std::vector<std::pair<std::size_t, double>>> adj(n);
    std::vector<std::pair<double, std::size_t>> cand;
    for (std::size_t i = 0; i < n; ++i) {
        cand.clear();
        for (std::size_t j = 0; j < n; ++j)
            if (j != i) cand.emplace_back(euclidean(points[i], points[j]), j);
        std::size_t kk = std::min<std::size_t>(static_cast<std::size_t>(k), cand.size());
        std::partial_sort(cand.begin(), cand.begin() + kk, cand.end());
        for (std::size_t a = 0; a < kk; ++a) {
            adj[i].emplace_back(cand[a].second, cand[a].first);
            adj[cand[a].second].emplace_back(i, cand[a].first);
        }
    }
    for (auto& nb : adj) {
        std::sort(nb.begin(), nb.end());
        nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    }

    // connectivity check before the all-pairs sweep
    std::vector<int> comp(n, -1);
    int ncomp = 0;
    for (std::size_t s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        std::vector<std::size_t> stack{s};
        comp[s] = ncomp;
        while (!stack.empty()) {
            std::size_t u = stack.back();
            stack.pop_back();
            for (auto [v, w] : adj[u])
                if (comp[v] < 0) {
                    comp[v] = ncomp;
                    stack.push_back(v);
                }
        }
        ++ncomp;
    }
    if (ncomp > 1) {
        std::vector<std::size_t> sizes(ncomp, 0), repr(ncomp, 0);
        for (std::size_t i = n; i-- > 0;) {
            ++sizes[comp[i]];
            repr[comp[i]] = i;
        }
        std::string msg = "k-NN graph (k=" + std::to_string(k) + ") splits into " +
                          std::to_string(ncomp) + " components:";
        for (int c = 0; c < ncomp; ++c)
            msg += " {size " + std::to_string(sizes[c]) + ", e.g. point " +
                   std::to_string(repr[c]) + "}";
        throw DisconnectedGraph(msg);
    }

    GraphOracle g;
    g.k = k;
    g.n = n;
    g.table.assign(n * n, 0.0);
    for (std::size_t s = 0; s < n; ++s) {
        auto dist = detail::dijkstra(adj, s);
        for (std::size_t j = 0; j < n; ++j) g.table[s * n + j] = dist[j];
    }
    PointSample out;
    out.points = std::move(points);
    out.oracle = std::move(g);
    out.label = "graph(k=" + std::to_string(k) + ")";
    return out;
}

/// Symmetry / zero diagonal / non-negativity / triangle inequality for an
/// explicit matrix. Exhaustive on triples up to 300 points, seeded sampling
/// above. Throws MetricViolation naming the offending entry or triple.
inline void validate_matrix_metric(const MatrixOracle& m, double tol = 1e-9) {
    std::size_t n = m.n;
    for (std::size_t i = 0; i < n; ++i) {
        if (m.at(i, i) != 0.0)
            throw MetricViolation("nonzero diagonal at index " + std::to_string(i), i, i, i);
        for (std::size_t j = i + 1; j < n; ++j) {
            if (m.at(i, j) < 0.0)
                throw MetricViolation("negative distance at (" + std::to_string(i) + "," +
                                          std::to_string(j) + ")",
                                      i, j, j);
            if (std::abs(m.at(i, j) - m.at(j, i)) > tol)
                throw MetricViolation("asymmetric entries at (" + std::to_string(i) + "," +
                                          std::to_string(j) + ")",
                                      i, j, j);
        }
    }
    auto check_triple = [&](std::size_t i, std::size_t j, std::size_t k) {
        if (m.at(i, k) > m.at(i, j) + m.at(j, k) + tol)
            throw MetricViolation("triangle inequality fails: d(" + std::to_string(i) + "," +
                                      std::to_string(k) + ") > d(" + std::to_string(i) + "," +
                                      std::to_string(j) + ") + d(" + std::to_string(j) + "," +
                                      std::to_string(k) + ")",
                                  i, j, k);
    };
    if (n <= 300) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k)
                    if (i != j && j != k && i != k) check_triple(i, j, k);
    } else {
        Rng rng(derive_seed(0xac5u, n));
        for (int t = 0; t < 100000; ++t)
            check_triple(rng.below(n), rng.below(n), rng.below(n));
    }
}

/// Metric-axiom spot check on seeded random triples of any sample.
/// Returns the worst triangle slack (negative means a violation beyond tol).
inline double check_metric_axioms(const PointSample& s, std::size_t triples, std::uint64_t seed,
                                  double tol = 1e-9) {
    Rng rng(derive_seed(seed, 0x3c));
    std::size_t n = s.size();
    double worst = std::numeric_limits<double>::infinity();
    for (std::size_t t = 0; t < triples; ++t) {
        std::size_t i = rng.below(n), j = rng.below(n), k = rng.below(n);
        if (s.distance(i, i) != 0.0)
            throw MetricViolation("d(i,i) != 0 at " + std::to_string(i), i, i, i);
        if (std::abs(s.distance(i, j) - s.distance(j, i)) > tol)
            throw MetricViolation("asymmetry at (" + std::to_string(i) + "," + std::to_string(j) + ")",
                                  i, j, j);
        double slack = s.distance(i, j) + s.distance(j, k) - s.distance(i, k);
        worst = std::min(worst, slack);
        if (slack < -tol)
            throw MetricViolation("triangle inequality fails on sampled triple", i, j, k);
    }
    return worst;
}

}  // namespace kuratowski
