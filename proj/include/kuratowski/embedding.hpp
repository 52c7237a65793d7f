#pragma once

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <limits>
#include <ostream>
#include <thread>
#include <unordered_map>
#include <vector>

#include "kuratowski/errors.hpp"
#include "kuratowski/metric_space.hpp"
#include "kuratowski/net.hpp"
#include "kuratowski/rng.hpp"

// The landmark embedding x -> (d(x,s))_{s in S} into l^inf(S) and the
// certification of its bi-Lipschitz constants: the upper constant 1 is the
// triangle inequality, the lower constant is measured pair by pair.

namespace kuratowski {

/// Distance table of the landmark embedding: row i holds the l^inf(S)
/// coordinates of sample point i.
struct KuratowskiImage {
    std::vector<std::size_t> landmarks;
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> dist;  // rows x cols, row-major

    const double* row(std::size_t i) const { return dist.data() + i * cols; }
};

inline KuratowskiImage embed(const PointSample& sample, const Net& net) {
    std::size_t n = sample.size();
    KuratowskiImage img;
    img.landmarks = net.landmark_indices;
    img.rows = n;
    img.cols = net.landmark_indices.size();
    img.dist.resize(img.rows * img.cols);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t c = 0; c < img.cols; ++c)
            img.dist[i * img.cols + c] = sample.distance(i, net.landmark_indices[c]);
    return img;
}

/// l^inf distance between two image rows: max_s |d(x,s) - d(y,s)|.
inline double linf_row_distance(const KuratowskiImage& img, std::size_t i, std::size_t j) {
    const double* a = img.row(i);
    const double* b = img.row(j);
    double best = 0.0;
    for (std::size_t c = 0; c < img.cols; ++c) best = std::max(best, std::abs(a[c] - b[c]));
    return best;
}

struct DistortionReport {
    double lower_const = 1.0;   // min over tested pairs of linf / d
    double upper_excess = 0.0;  // max over tested pairs of linf - d
    std::size_t worst_i = 0;    // pair attaining lower_const
    std::size_t worst_j = 0;
    bool has_worst_pair = false;
    std::uint64_t pairs_tested = 0;  // pairs with d > 0 entering the statistics
    std::uint64_t zero_pairs = 0;    // duplicate-point pairs, tallied but skipped
    double eps_target = 0.0;
    bool pass = false;  // lower_const >= 1 - eps_target - 1e-9
};

namespace detail {

/// Decode a triangular pair index p in [0, n(n-1)/2) to (i, j), j < i.
inline void decode_pair(std::uint64_t p, std::size_t& i, std::size_t& j) {
    auto idx = static_cast<std::uint64_t>(
        (1.0 + std::sqrt(1.0 + 8.0 * static_cast<double>(p))) / 2.0);
    while (idx * (idx - 1) / 2 > p) --idx;
    while ((idx + 1) * idx / 2 <= p) ++idx;
    i = static_cast<std::size_t>(idx);
    j = static_cast<std::size_t>(p - idx * (idx - 1) / 2);
}

/// First `budget` entries of a seeded Fisher-Yates shuffle of [0, total),
/// computed sparsely: distinct pair indices without replacement.
inline std::vector<std::uint64_t> sample_pair_indices(std::uint64_t total, std::uint64_t budget,
                                                      std::uint64_t seed) {
    Rng rng(derive_seed(seed, 0x9a17));
    std::unordered_map<std::uint64_t, std::uint64_t> moved;
    std::vector<std::uint64_t> out;
    out.reserve(budget);
    for (std::uint64_t t = 0; t < budget; ++t) {
        std::uint64_t r = t + rng.below(total - t);
        auto look = [&](std::uint64_t x) {
            auto it = moved.find(x);
            return it == moved.end() ? x : it->second;
        };
        std::uint64_t vr = look(r);
        moved[r] = look(t);
        out.push_back(vr);
    }
    return out;
}

struct PairAccumulator {
    double lower = std::numeric_limits<double>::infinity();
    std::uint64_t lower_pair = std::numeric_limits<std::uint64_t>::max();
    std::size_t wi = 0, wj = 0;
    double excess = -std::numeric_limits<double>::infinity();
    std::uint64_t tested = 0;
    std::uint64_t zeros = 0;

    void absorb(const PairAccumulator& o) {
        tested += o.tested;
        zeros += o.zeros;
        excess = std::max(excess, o.excess);
        if (o.lower < lower || (o.lower == lower && o.lower_pair < lower_pair)) {
            lower = o.lower;
            lower_pair = o.lower_pair;
            wi = o.wi;
            wj = o.wj;
        }
    }
};

}  // namespace detail

/// Certify the embedding of `sample` through `net` against the target eps.
/// Tests all pairs when their count fits the budget (budget 0 = exhaustive),
/// otherwise a seeded without-replacement subset. The worst pair is exact
/// for the tested set, with ties resolved toward the lowest pair index, so
/// the report is bit-identical for any thread count. pair_csv, when set,
/// receives one "i,j,distance,linf,ratio" row per tested pair (forces a
/// single-threaded scan).
inline DistortionReport verify_eps_good(const PointSample& sample, const Net& net, double eps,
                                        std::uint64_t pair_budget = 0, std::uint64_t seed = 0,
                                        int threads = 1, std::ostream* pair_csv = nullptr) {
    if (eps <= 0.0 || eps >= 1.0) throw DomainError("verify_eps_good requires eps in (0,1)");
    std::size_t n = sample.size();
    KuratowskiImage img = embed(sample, net);
    std::uint64_t total = static_cast<std::uint64_t>(n) * (n - 1) / 2;
    bool exhaustive = (pair_budget == 0 || total <= pair_budget);
    std::vector<std::uint64_t> drawn;
    if (!exhaustive) drawn = detail::sample_pair_indices(total, pair_budget, seed);
    std::uint64_t work = exhaustive ? total : drawn.size();

    if (pair_csv) {
        threads = 1;
        *pair_csv << "i,j,distance,linf_distance,ratio\n";
    }

    auto scan = [&](std::uint64_t lo, std::uint64_t hi, detail::PairAccumulator& acc) {
        char line[128];
        for (std::uint64_t w = lo; w < hi; ++w) {
            std::uint64_t p = exhaustive ? w : drawn[w];
            std::size_t i, j;
            detail::decode_pair(p, i, j);
            double d = sample.distance(i, j);
            if (d == 0.0) {
                ++acc.zeros;
                continue;
            }
            double linf = linf_row_distance(img, i, j);
            double ratio = linf / d;
            ++acc.tested;
            acc.excess = std::max(acc.excess, linf - d);
            if (ratio < acc.lower || (ratio == acc.lower && p < acc.lower_pair)) {
                acc.lower = ratio;
                acc.lower_pair = p;
                acc.wi = i;
                acc.wj = j;
            }
            if (pair_csv) {
                std::snprintf(line, sizeof line, "%zu,%zu,%.17g,%.17g,%.17g\n", i, j, d, linf,
                              ratio);
                *pair_csv << line;
            }
        }
    };

    // Fixed chunk grid merged in order: the reduction is independent of the
    // number of worker threads.
    constexpr std::uint64_t chunk = 1 << 16;
    std::uint64_t nchunks = (work + chunk - 1) / chunk;
    std::vector<detail::PairAccumulator> parts(nchunks);
    if (threads <= 1 || nchunks <= 1) {
        for (std::uint64_t c = 0; c < nchunks; ++c)
            scan(c * chunk, std::min(work, (c + 1) * chunk), parts[c]);
    } else {
        std::atomic<std::uint64_t> next{0};
        auto worker = [&] {
            for (std::uint64_t c = next.fetch_add(1); c < nchunks; c = next.fetch_add(1))
                scan(c * chunk, std::min(work, (c + 1) * chunk), parts[c]);
        };
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    detail::PairAccumulator acc;
    for (const auto& part : parts) acc.absorb(part);

    DistortionReport rep;
    rep.eps_target = eps;
    rep.pairs_tested = acc.tested;
    rep.zero_pairs = acc.zeros;
    if (acc.tested > 0) {
        rep.lower_const = acc.lower;
        rep.upper_excess = acc.excess;
        rep.worst_i = acc.wi;
        rep.worst_j = acc.wj;
        rep.has_worst_pair = true;
    }
    rep.pass = rep.lower_const >= 1.0 - eps - 1e-9;
    return rep;
}

/// Upper estimate of the smallest eps-good landmark count over the sample:
/// among the nets realizable by farthest-first traversal, the one with the
/// largest delta whose exhaustive verification passes. Monotone because a
/// smaller delta yields a superset of landmarks.
inline Net empirical_kappa_net(const PointSample& sample, double eps) {
    if (eps <= 0.0 || eps >= 1.0) throw DomainError("empirical_kappa requires eps in (0,1)");
    auto traversal = greedy_traversal(sample);
    // Candidate nets: one per distinct positive insertion radius, plus the
    // singleton net (delta above the largest radius).
    struct Candidate {
        double delta;
        std::size_t count;
    };
    std::vector<Candidate> cands;
    if (traversal.order.size() == 1) {
        cands.push_back({1.0, 1});
    } else {
        double top = traversal.radii[1];
        cands.push_back({top > 0.0 ? 2.0 * top : 1.0, 1});
        std::size_t k = 1;
        while (k < traversal.radii.size()) {
            double v = traversal.radii[k];
            if (v <= 0.0) break;
            std::size_t kk = k;
            while (kk + 1 < traversal.radii.size() && traversal.radii[kk + 1] == v) ++kk;
            cands.push_back({v, kk + 1});
            k = kk + 1;
        }
    }
    auto passes = [&](const Candidate& c) {
        Net net = net_from_prefix(sample, traversal, c.count, c.delta);
        return verify_eps_good(sample, net, eps).pass;
    };
    // pass is monotone along cands (increasing count); find the first pass
    std::size_t lo = 0, hi = cands.size() - 1;
    if (!passes(cands[hi]))
        throw NoPassingNet("even the full farthest-first net fails verification");
    while (lo < hi) {
        std::size_t mid = (lo + hi) / 2;
        if (passes(cands[mid]))
            hi = mid;
        else
            lo = mid + 1;
    }
    return net_from_prefix(sample, traversal, cands[lo].count, cands[lo].delta);
}

/// Size of the net found by empirical_kappa_net.
inline std::size_t empirical_kappa(const PointSample& sample, double eps) {
    return empirical_kappa_net(sample, eps).landmark_indices.size();
}

}  // namespace kuratowski
