#pragma once

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "kuratowski/errors.hpp"
#include "kuratowski/metric_space.hpp"

// File ingestion: point clouds (CSV rows of coordinates or a JSON array of
// arrays) and explicit distance matrices (square CSV). All floats are
// decimal 64-bit.

namespace kuratowski {

enum class PointFormat { autodetect, csv, json };

namespace detail {

inline bool parse_double(const std::string& tok, double& out) {
    const char* s = tok.c_str();
    char* end = nullptr;
    out = std::strtod(s, &end);
    if (end == s) return false;
    while (*end != '\0') {
        if (!std::isspace(static_cast<unsigned char>(*end))) return false;
        ++end;
    }
    return true;
}

inline std::vector<std::string> split_csv_row(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : line) {
        if (ch == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

inline bool blank(const std::string& line) {
    for (char ch : line)
        if (!std::isspace(static_cast<unsigned char>(ch))) return false;
    return true;
}

/// Rows of doubles from a CSV file. An unparsable first row is treated as a
/// header. Throws ParseError with the 1-based line number on bad input.
inline std::vector<std::vector<double>> read_csv_rows(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open file: " + path);
    std::vector<std::vector<double>> rows;
    std::string line;
    std::size_t lineno = 0;
    bool first_content = true;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (blank(line)) continue;
        auto toks = split_csv_row(line);
        std::vector<double> vals(toks.size());
        bool ok = true;
        for (std::size_t c = 0; c < toks.size(); ++c)
            if (!parse_double(toks[c], vals[c])) {
                ok = false;
                break;
            }
        if (!ok) {
            if (first_content) {  // header row
                first_content = false;
                continue;
            }
            throw ParseError(path + ":" + std::to_string(lineno) + ": unparsable numeric field");
        }
        first_content = false;
        if (!rows.empty() && vals.size() != rows.front().size())
            throw ParseError(path + ":" + std::to_string(lineno) + ": expected " +
                             std::to_string(rows.front().size()) + " columns, got " +
                             std::to_string(vals.size()));
        rows.push_back(std::move(vals));
    }
    if (rows.empty()) throw ParseError(path + ": no data rows");
    return rows;
}

inline std::vector<std::vector<double>> read_json_rows(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open file: " + path);
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
    if (!doc.is_array() || doc.empty())
        throw ParseError(path + ": expected a nonempty JSON array of arrays");
    std::vector<std::vector<double>> rows;
    for (const auto& row : doc) {
        if (!row.is_array()) throw ParseError(path + ": expected a JSON array of arrays");
        std::vector<double> vals;
        for (const auto& x : row) {
            if (!x.is_number()) throw ParseError(path + ": non-numeric coordinate");
            vals.push_back(x.get<double>());
        }
        if (!rows.empty() && vals.size() != rows.front().size())
            throw ParseError(path + ": rows of unequal width");
        rows.push_back(std::move(vals));
    }
    return rows;
}

inline bool ends_with(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

}  // namespace detail

/// Raw coordinate rows from a point-cloud file.
inline std::vector<std::vector<double>> load_point_rows(const std::string& path,
                                                        PointFormat format = PointFormat::autodetect) {
    if (format == PointFormat::autodetect)
        format = detail::ends_with(path, ".json") ? PointFormat::json : PointFormat::csv;
    return format == PointFormat::json ? detail::read_json_rows(path) : detail::read_csv_rows(path);
}

/// Point cloud as a metric space under the Euclidean metric.
inline PointSample load_points(const std::string& path,
                               PointFormat format = PointFormat::autodetect) {
    return euclidean_sample(load_point_rows(path, format), "file:" + path);
}

/// Square distance matrix from CSV, validated for the metric axioms.
inline PointSample load_matrix(const std::string& path, double tol = 1e-9) {
    auto rows = detail::read_csv_rows(path);
    std::size_t n = rows.size();
    if (rows.front().size() != n)
        throw ParseError(path + ": matrix is " + std::to_string(n) + "x" +
                         std::to_string(rows.front().size()) + ", expected square");
    MatrixOracle m;
    m.n = n;
    m.entries.reserve(n * n);
    for (const auto& row : rows)
        for (double v : row) m.entries.push_back(v);
    validate_matrix_metric(m, tol);
    PointSample s;
    s.oracle = std::move(m);
    s.label = "matrix:" + path;
    return s;
}

}  // namespace kuratowski
