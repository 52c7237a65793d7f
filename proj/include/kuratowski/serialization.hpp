#pragma once

#include <cstdio>
#include <fstream>
#include <optional>
#include <string>

#include "json.hpp"
#include "kuratowski/bounds.hpp"
#include "kuratowski/embedding.hpp"
#include "kuratowski/errors.hpp"
#include "kuratowski/net.hpp"

// JSON wire formats. Every document carries schema_version; key order is
// alphabetic (nlohmann default), so identical inputs serialize to identical
// bytes.

namespace kuratowski {

inline constexpr int schema_version = 1;

inline nlohmann::json net_to_json(const Net& net) {
    nlohmann::json j;
    j["schema_version"] = schema_version;
    j["delta"] = net.delta;
    j["landmark_indices"] = net.landmark_indices;
    if (std::isfinite(net.min_pairwise))
        j["min_pairwise"] = net.min_pairwise;
    else
        j["min_pairwise"] = nullptr;  // single landmark: no pair exists
    return j;
}

inline Net net_from_json(const nlohmann::json& j) {
    Net net;
    try {
        net.delta = j.at("delta").get<double>();
        net.landmark_indices = j.at("landmark_indices").get<std::vector<std::size_t>>();
        const auto& mp = j.at("min_pairwise");
        net.min_pairwise =
            mp.is_null() ? std::numeric_limits<double>::infinity() : mp.get<double>();
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("net JSON: ") + e.what());
    }
    return net;
}

inline nlohmann::json report_to_json(const DistortionReport& rep) {
    nlohmann::json j;
    j["schema_version"] = schema_version;
    j["eps_target"] = rep.eps_target;
    j["lower_const"] = rep.lower_const;
    j["upper_excess"] = rep.upper_excess;
    if (rep.has_worst_pair)
        j["worst_pair"] = {rep.worst_i, rep.worst_j};
    else
        j["worst_pair"] = nullptr;
    j["pairs_tested"] = rep.pairs_tested;
    j["zero_pairs"] = rep.zero_pairs;
    j["verdict"] = rep.pass ? "pass" : "fail";
    return j;
}

/// Bound evaluation with its inputs and both sphere-measure conventions.
inline nlohmann::json bound_to_json(int n, double vol, std::optional<double> K, double eps,
                                    const BoundResult& r) {
    nlohmann::json j;
    j["schema_version"] = schema_version;
    j["formula_tag"] = r.formula_tag;
    j["n"] = n;
    j["vol"] = vol;
    if (K)
        j["K"] = *K;
    else
        j["K"] = nullptr;
    j["eps"] = eps;
    j["c_n"] = r.c_n;
    j["bound"] = r.bound;
    j["sphere_volume_used"] = bound_sphere_normalization(n);
    j["sphere_volume_standard"] = unit_sphere_area(n - 1);
    j["sphere_volume_mismatch"] = true;  // conventions differ for every n
    return j;
}

inline void write_json_file(const std::string& path, const nlohmann::json& j) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write file: " + path);
    out << j.dump(2) << '\n';
}

inline nlohmann::json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
    return j;
}

/// Shortest round-trip decimal for CSV cells.
inline std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace kuratowski
