#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

#include "kuratowski/errors.hpp"
#include "kuratowski/metric_space.hpp"
#include "kuratowski/special.hpp"

// delta-net construction by farthest-first traversal. The traversal adds the
// point farthest from the chosen set, so pairwise landmark distances never
// drop below the stopping radius: covering and disjoint-half-ball packing
// come out of the same loop.

namespace kuratowski {

struct Net {
    std::vector<std::size_t> landmark_indices;
    double delta = 0.0;
    double min_pairwise = std::numeric_limits<double>::infinity();
};

/// Farthest-first order with insertion radii. order[0] = 0; radii[k] is the
/// distance from order[k] to the previous prefix (radii[0] = +inf), a
/// non-increasing sequence. greedy_net(delta) is the prefix with radii >= delta.
struct GreedyTraversal {
    std::vector<std::size_t> order;
    std::vector<double> radii;
};

namespace detail {

/// Runs farthest-first until the max distance-to-set drops below stop_delta
/// (or the sample is exhausted). Ties break toward the lowest index.
inline GreedyTraversal farthest_first(const PointSample& sample, double stop_delta) {
    std::size_t n = sample.size();
    if (n == 0) throw DomainError("farthest-first traversal needs a nonempty sample");
    GreedyTraversal t;
    t.order.push_back(0);
    t.radii.push_back(std::numeric_limits<double>::infinity());
    std::vector<double> mindist(n);
    for (std::size_t i = 0; i < n; ++i) mindist[i] = sample.distance(i, 0);
    while (t.order.size() < n) {
        std::size_t best = 0;
        double bestd = -1.0;
        for (std::size_t i = 0; i < n; ++i)
            if (mindist[i] > bestd) {
                bestd = mindist[i];
                best = i;
            }
        if (bestd < stop_delta) break;
        t.order.push_back(best);
        t.radii.push_back(bestd);
        for (std::size_t i = 0; i < n; ++i)
            mindist[i] = std::min(mindist[i], sample.distance(i, best));
    }
    return t;
}

inline double min_pairwise_distance(const PointSample& sample,
                                    const std::vector<std::size_t>& idx) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t a = 0; a < idx.size(); ++a)
        for (std::size_t b = a + 1; b < idx.size(); ++b)
            best = std::min(best, sample.distance(idx[a], idx[b]));
    return best;
}

}  // namespace detail

/// Full farthest-first order (every sample point, duplicates last with
/// radius 0).
inline GreedyTraversal greedy_traversal(const PointSample& sample) {
    return detail::farthest_first(sample, -1.0);
}

/// Greedy delta-net: covering distance < delta for every sample point,
/// pairwise landmark distances >= delta.
inline Net greedy_net(const PointSample& sample, double delta) {
    if (delta <= 0.0) throw DomainError("greedy_net requires delta > 0");
    auto t = detail::farthest_first(sample, delta);
    Net net;
    net.landmark_indices = std::move(t.order);
    net.delta = delta;
    net.min_pairwise = detail::min_pairwise_distance(sample, net.landmark_indices);
    return net;
}

/// Net from the first `count` points of a traversal; delta is the given
/// value (callers pick one consistent with the insertion radii).
inline Net net_from_prefix(const PointSample& sample, const GreedyTraversal& t,
                           std::size_t count, double delta) {
    if (count < 1 || count > t.order.size())
        throw DomainError("prefix length out of range");
    Net net;
    net.landmark_indices.assign(t.order.begin(), t.order.begin() + count);
    net.delta = delta;
    net.min_pairwise = detail::min_pairwise_distance(sample, net.landmark_indices);
    return net;
}

/// Exhaustive check of the two net invariants over the sample. Returns the
/// covering radius (max distance to the landmark set); throws nothing.
struct NetCheck {
    double covering_radius = 0.0;
    double min_pairwise = std::numeric_limits<double>::infinity();
    bool covering_ok = false;  // covering_radius < delta
    bool packing_ok = false;   // min_pairwise >= delta
};

inline NetCheck check_net(const PointSample& sample, const Net& net) {
    NetCheck c;
    std::size_t n = sample.size();
    for (std::size_t i = 0; i < n; ++i) {
        double md = std::numeric_limits<double>::infinity();
        for (std::size_t s : net.landmark_indices) md = std::min(md, sample.distance(i, s));
        c.covering_radius = std::max(c.covering_radius, md);
    }
    c.min_pairwise = detail::min_pairwise_distance(sample, net.landmark_indices);
    c.covering_ok = c.covering_radius < net.delta;
    c.packing_ok = c.min_pairwise >= net.delta;
    return c;
}

/// Effective curvature bound and the induced rescaling.
struct ScaleContext {
    double sec_sup = 0.0;  // user- or model-supplied upper bound on sec
    double K = 0.01;       // max(1/100, sec_sup)
    double t = 1.0;        // 10 * sqrt(K); the metric t^2 g has sec <= 1/100
};

inline ScaleContext make_scale_context(double sec_sup) {
    if (!std::isfinite(sec_sup)) throw DomainError("sec_sup must be finite");
    ScaleContext ctx;
    ctx.sec_sup = sec_sup;
    ctx.K = std::max(0.01, sec_sup);
    ctx.t = 10.0 * std::sqrt(ctx.K);
    return ctx;
}

/// Net radius, in the original metric, that makes a greedy net eps-good on
/// a manifold obeying the context's curvature bound: (eps/2) / t. Goodness
/// is scale invariant, the net requirement is not.
inline double required_delta(double eps, const ScaleContext& ctx) {
    if (eps <= 0.0 || eps >= max_theory_eps)
        throw DomainError("required_delta needs eps in (0, 4/(5*pi))");
    return (eps / 2.0) / ctx.t;
}

/// Same points, every pairwise distance multiplied by t. Manifold metadata
/// follows the scaling (vol by t^dim, sec by t^-2).
inline PointSample scale_sample(const PointSample& sample, double t) {
    if (!(t > 0.0) || !std::isfinite(t)) throw DomainError("scale factor must be positive");
    PointSample out = sample;
    out.scale = sample.scale * t;
    if (out.volume && out.manifold_dim) *out.volume *= std::pow(t, *out.manifold_dim);
    if (out.sec_sup) *out.sec_sup /= t * t;
    return out;
}

}  // namespace kuratowski
