// Command-line surface: bound evaluation, net construction, embedding
// verification, model-kernel Monte Carlo, and parameter sweeps.
//
// Exit codes: 0 success / verification pass, 1 verification failure,
// 2 configuration or domain error, 3 I/O or input-data error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "kuratowski/bounds.hpp"
#include "kuratowski/embedding.hpp"
#include "kuratowski/io.hpp"
#include "kuratowski/metric_space.hpp"
#include "kuratowski/model_suites.hpp"
#include "kuratowski/net.hpp"
#include "kuratowski/serialization.hpp"
#include "kuratowski/special.hpp"

namespace {

using namespace kuratowski;

constexpr int exit_ok = 0;
constexpr int exit_verify_fail = 1;
constexpr int exit_config = 2;
constexpr int exit_io = 3;

constexpr std::uint64_t default_exhaustive_cap = 5000000;  // pairs

/// Scalar with an optional "pi" suffix: "0.25", "1600pi", "pi".
double parse_scalar(const std::string& text) {
    std::string t = text;
    while (!t.empty() && std::isspace(static_cast<unsigned char>(t.front()))) t.erase(t.begin());
    while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back()))) t.pop_back();
    double factor = 1.0;
    if (t.size() >= 2 && t.compare(t.size() - 2, 2, "pi") == 0) {
        factor = pi;
        t.erase(t.size() - 2);
        if (t.empty()) return pi;
    }
    double v;
    if (!detail::parse_double(t, v))
        throw DomainError("cannot parse numeric value '" + text + "'");
    return factor * v;
}

std::vector<double> parse_scalar_list(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(parse_scalar(tok));
    if (out.empty()) throw DomainError("empty list: '" + text + "'");
    return out;
}

struct InputSpec {
    std::string sphere_radius;  // scalar string; nonempty selects the sphere
    int dim = 2;
    std::size_t count = 1000;
    std::string torus_periods;  // comma list; nonempty selects the torus
    int grid = 0;               // grid resolution; 0 means random points
    std::string points_path;
    std::string matrix_path;
    int knn = 0;  // 0: plain Euclidean metric on the cloud
    std::string format = "auto";
    std::uint64_t seed = 0;
};

void add_input_options(CLI::App* cmd, InputSpec& in) {
    cmd->add_option("--sphere", in.sphere_radius, "analytic sphere of this radius");
    cmd->add_option("--dim", in.dim, "sphere dimension (ambient dim+1)");
    cmd->add_option("--count", in.count, "number of random sample points");
    cmd->add_option("--torus", in.torus_periods, "flat torus periods, e.g. 1,1");
    cmd->add_option("--grid", in.grid, "torus grid resolution per axis (0: random)");
    cmd->add_option("--points", in.points_path, "point cloud file (CSV or JSON)");
    cmd->add_option("--knn", in.knn, "graph metric with this many neighbors (with --points)");
    cmd->add_option("--format", in.format, "point file format: auto|csv|json");
    cmd->add_option("--matrix", in.matrix_path, "explicit distance matrix (CSV)");
    cmd->add_option("--seed", in.seed, "random seed (all randomness derives from it)");
}

PointSample build_sample(const InputSpec& in) {
    int selected = (!in.sphere_radius.empty()) + (!in.torus_periods.empty()) +
                   (!in.points_path.empty()) + (!in.matrix_path.empty());
    if (selected != 1)
        throw DomainError("select exactly one input: --sphere, --torus, --points, or --matrix");
    if (!in.sphere_radius.empty())
        return sample_sphere(in.dim, parse_scalar(in.sphere_radius), in.count,
                             derive_seed(in.seed, 11));
    if (!in.torus_periods.empty()) {
        auto periods = parse_scalar_list(in.torus_periods);
        if (in.grid > 0) return sample_torus_grid(periods, in.grid);
        return sample_torus_random(periods, in.count, derive_seed(in.seed, 12));
    }
    PointFormat fmt = PointFormat::autodetect;
    if (in.format == "csv")
        fmt = PointFormat::csv;
    else if (in.format == "json")
        fmt = PointFormat::json;
    else if (in.format != "auto")
        throw DomainError("unknown --format '" + in.format + "'");
    if (!in.points_path.empty()) {
        auto rows = load_point_rows(in.points_path, fmt);
        if (in.knn > 0) return build_graph_metric(std::move(rows), in.knn);
        return euclidean_sample(std::move(rows), "file:" + in.points_path);
    }
    return load_matrix(in.matrix_path);
}

double resolve_sec(const PointSample& sample, const std::string& sec_flag) {
    if (!sec_flag.empty()) return parse_scalar(sec_flag);
    if (sample.sec_sup) return *sample.sec_sup;
    throw DomainError("curvature bound unknown for this sample; pass --sec");
}

void write_or_print(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw IoError("cannot write file: " + out_path);
    f << text;
}

int run_bound(int n, const std::string& vol_s, const std::string& sec_s, const std::string& eps_s,
              const std::string& json_path) {
    double vol = parse_scalar(vol_s);
    double eps = parse_scalar(eps_s);
    double sec = parse_scalar(sec_s);
    ScaleContext ctx = make_scale_context(sec);
    BoundResult kb = kappa_bound(n, vol, ctx.K, eps);
    BoundResult pb = packing_bound(n, vol, eps);
    double delta = required_delta(eps, ctx);

    std::ostringstream os;
    os << "n                        " << n << "\n"
       << "eps                      " << format_double(eps) << "\n"
       << "vol                      " << format_double(vol) << "\n"
       << "C(n)                     " << format_double(kb.c_n) << "\n"
       << "K = max(1/100, sec)      " << format_double(ctx.K) << "\n"
       << "t = 10*sqrt(K)           " << format_double(ctx.t) << "\n"
       << "required delta           " << format_double(delta) << "\n"
       << "kappa upper bound        " << format_double(kb.bound) << "\n"
       << "packing count bound      " << format_double(pb.bound) << "  (premise: sec <= 1/100)\n"
       << "sphere volume (used)     " << format_double(bound_sphere_normalization(n)) << "\n"
       << "sphere volume (standard) " << format_double(unit_sphere_area(n - 1)) << "\n";
    std::cout << os.str();

    if (!json_path.empty()) {
        nlohmann::json j = bound_to_json(n, vol, ctx.K, eps, kb);
        j["packing_bound"] = pb.bound;
        j["scale_factor_t"] = ctx.t;
        j["required_delta"] = delta;
        write_json_file(json_path, j);
    }
    return exit_ok;
}

int run_net(const InputSpec& in, const std::string& delta_s, const std::string& eps_s,
            const std::string& sec_s, const std::string& out_path) {
    PointSample sample = build_sample(in);
    double delta;
    if (!delta_s.empty()) {
        delta = parse_scalar(delta_s);
    } else if (!eps_s.empty()) {
        ScaleContext ctx = make_scale_context(resolve_sec(sample, sec_s));
        delta = required_delta(parse_scalar(eps_s), ctx);
    } else {
        throw DomainError("net needs --delta or --eps");
    }
    Net net = greedy_net(sample, delta);
    std::cerr << "sample " << sample.label << ": " << sample.size() << " points, net size "
              << net.landmark_indices.size() << ", min pairwise "
              << format_double(net.min_pairwise) << "\n";
    write_or_print(out_path, net_to_json(net).dump(2) + "\n");
    return exit_ok;
}

int run_verify(const InputSpec& in, const std::string& net_path, const std::string& delta_s,
               const std::string& eps_s, const std::string& sec_s, std::uint64_t pairs,
               bool pairs_given, int threads, const std::string& out_path,
               const std::string& csv_path) {
    PointSample sample = build_sample(in);
    double eps = parse_scalar(eps_s);
    if (eps <= 0.0 || eps >= 1.0) throw DomainError("--eps must lie in (0,1)");
    if (eps >= max_theory_eps)
        std::cerr << "warning: eps " << format_double(eps)
                  << " is outside the theory range (0, 4/(5*pi)); running in pure-empirical mode\n";

    Net net;
    if (!net_path.empty()) {
        net = net_from_json(read_json_file(net_path));
        for (std::size_t s : net.landmark_indices)
            if (s >= sample.size())
                throw DomainError("net landmark index " + std::to_string(s) +
                                  " out of range for this sample");
    } else if (!delta_s.empty()) {
        net = greedy_net(sample, parse_scalar(delta_s));
    } else if (eps < max_theory_eps) {
        ScaleContext ctx = make_scale_context(resolve_sec(sample, sec_s));
        net = greedy_net(sample, required_delta(eps, ctx));
    } else {
        throw DomainError("verify needs --net or --delta when eps is outside the theory range");
    }

    std::uint64_t total = static_cast<std::uint64_t>(sample.size()) * (sample.size() - 1) / 2;
    if (!pairs_given && total > default_exhaustive_cap)
        throw DomainError(std::to_string(total) + " pairs exceed the exhaustive default cap of " +
                          std::to_string(default_exhaustive_cap) + "; pass --pairs");

    std::ofstream csv;
    std::ostream* csv_ptr = nullptr;
    if (!csv_path.empty()) {
        csv.open(csv_path, std::ios::binary);
        if (!csv) throw IoError("cannot write file: " + csv_path);
        csv_ptr = &csv;
    }
    DistortionReport rep =
        verify_eps_good(sample, net, eps, pairs_given ? pairs : 0, in.seed, threads, csv_ptr);
    std::cerr << "net size " << net.landmark_indices.size() << ", pairs tested "
              << rep.pairs_tested << " (+" << rep.zero_pairs << " zero-distance)\n"
              << "lower constant " << format_double(rep.lower_const) << " vs target "
              << format_double(1.0 - eps) << ", upper excess " << format_double(rep.upper_excess)
              << "\n";
    if (rep.has_worst_pair)
        std::cerr << "worst pair (" << rep.worst_i << "," << rep.worst_j << "), d = "
                  << format_double(sample.distance(rep.worst_i, rep.worst_j)) << "\n";
    write_or_print(out_path, report_to_json(rep).dump(2) + "\n");
    return rep.pass ? exit_ok : exit_verify_fail;
}

int run_model_check(std::size_t trials, const std::string& eps_s, int dim, std::uint64_t seed) {
    double eps = parse_scalar(eps_s);
    detail::require_theory_eps(eps);
    auto suites = run_model_suites(trials, eps, dim, seed);
    bool all = true;
    for (const auto& s : suites) {
        std::printf("[%s] %-24s trials=%-9llu violations=%-6llu min_margin=% .3e tol=%g\n",
                    s.pass ? "PASS" : "FAIL", s.name.c_str(),
                    static_cast<unsigned long long>(s.trials),
                    static_cast<unsigned long long>(s.violations), s.min_margin, s.tolerance);
        all = all && s.pass;
    }
    return all ? exit_ok : exit_verify_fail;
}

int run_sweep(const InputSpec& in, const std::string& eps_list_s, const std::string& sec_s,
              int n_override, const std::string& vol_s, std::uint64_t pairs, bool pairs_given,
              int threads, const std::string& out_path) {
    PointSample sample = build_sample(in);
    auto eps_list = parse_scalar_list(eps_list_s);
    ScaleContext ctx = make_scale_context(resolve_sec(sample, sec_s));
    int n = n_override > 0 ? n_override : sample.manifold_dim.value_or(0);
    if (n < 2) throw DomainError("manifold dimension unknown; pass --n");
    double vol;
    if (!vol_s.empty())
        vol = parse_scalar(vol_s);
    else if (sample.volume)
        vol = *sample.volume;
    else
        throw DomainError("manifold volume unknown; pass --vol");

    std::uint64_t total = static_cast<std::uint64_t>(sample.size()) * (sample.size() - 1) / 2;
    if (!pairs_given && total > default_exhaustive_cap)
        throw DomainError(std::to_string(total) + " pairs exceed the exhaustive default cap of " +
                          std::to_string(default_exhaustive_cap) + "; pass --pairs");

    std::ostringstream os;
    os << "eps,delta,net_size,lower_const,kappa_bound,packing_bound\n";
    for (double eps : eps_list) {
        detail::require_theory_eps(eps);
        double delta = required_delta(eps, ctx);
        Net net = greedy_net(sample, delta);
        DistortionReport rep =
            verify_eps_good(sample, net, eps, pairs_given ? pairs : 0, in.seed, threads);
        BoundResult kb = kappa_bound(n, vol, ctx.K, eps);
        BoundResult pb = packing_bound(n, vol, eps);
        os << format_double(eps) << ',' << format_double(delta) << ','
           << net.landmark_indices.size() << ',' << format_double(rep.lower_const) << ','
           << format_double(kb.bound) << ',' << format_double(pb.bound) << '\n';
    }
    write_or_print(out_path, os.str());
    return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"landmark l-infinity embeddings on sampled metric spaces"};
    app.require_subcommand(0, 1);

    // bound
    auto* bound = app.add_subcommand("bound", "evaluate the landmark-count bounds");
    int bound_n = 0;
    std::string bound_vol, bound_sec = "0", bound_eps, bound_json;
    bound->add_option("--n", bound_n, "manifold dimension (>= 2)")->required();
    bound->add_option("--vol", bound_vol, "manifold volume (pi literals ok)")->required();
    bound->add_option("--sec", bound_sec, "upper bound on sectional curvature");
    bound->add_option("--eps", bound_eps, "target eps in (0, 4/(5*pi))")->required();
    bound->add_option("--json", bound_json, "also write the result as JSON");

    // net
    auto* netc = app.add_subcommand("net", "build a greedy delta-net");
    InputSpec net_in;
    add_input_options(netc, net_in);
    std::string net_delta, net_eps, net_sec, net_out;
    netc->add_option("--delta", net_delta, "net radius");
    netc->add_option("--eps", net_eps, "derive the radius from eps and the curvature bound");
    netc->add_option("--sec", net_sec, "curvature bound override (matrix/graph inputs)");
    netc->add_option("--out", net_out, "output net JSON path (default stdout)");

    // verify
    auto* ver = app.add_subcommand("verify", "certify the embedding constants");
    InputSpec ver_in;
    add_input_options(ver, ver_in);
    std::string ver_net, ver_delta, ver_eps, ver_sec, ver_out, ver_csv;
    std::uint64_t ver_pairs = 0;
    int ver_threads = 1;
    ver->add_option("--net", ver_net, "net JSON produced by the net subcommand");
    ver->add_option("--delta", ver_delta, "build a greedy net with this radius");
    ver->add_option("--eps", ver_eps, "target eps in (0,1)")->required();
    ver->add_option("--sec", ver_sec, "curvature bound override (matrix/graph inputs)");
    auto* pairs_opt = ver->add_option("--pairs", ver_pairs, "pair budget (0 = exhaustive)");
    ver->add_option("--threads", ver_threads, "worker threads (result is thread-count invariant)");
    ver->add_option("--out", ver_out, "report JSON path (default stdout)");
    ver->add_option("--csv", ver_csv, "dump per-pair ratios to CSV");

    // model-check
    auto* mc = app.add_subcommand("model-check", "run the model-space kernel suites");
    std::size_t mc_trials = 10000;
    std::string mc_eps = "0.2";
    int mc_dim = 2;
    std::uint64_t mc_seed = 0;
    mc->add_option("--trials", mc_trials, "trials per suite");
    mc->add_option("--eps", mc_eps, "witness eps in (0, 4/(5*pi))");
    mc->add_option("--dim", mc_dim, "model sphere dimension");
    mc->add_option("--seed", mc_seed, "random seed");

    // sweep
    auto* sw = app.add_subcommand("sweep", "tabulate net size and bounds across eps values");
    InputSpec sw_in;
    add_input_options(sw, sw_in);
    std::string sw_eps_list, sw_sec, sw_vol, sw_out;
    int sw_n = 0;
    std::uint64_t sw_pairs = 0;
    int sw_threads = 1;
    sw->add_option("--eps-list", sw_eps_list, "comma-separated eps values")->required();
    sw->add_option("--sec", sw_sec, "curvature bound override");
    sw->add_option("--n", sw_n, "manifold dimension override");
    sw->add_option("--vol", sw_vol, "manifold volume override");
    auto* sw_pairs_opt = sw->add_option("--pairs", sw_pairs, "pair budget per eps");
    sw->add_option("--threads", sw_threads, "worker threads");
    sw->add_option("--out", sw_out, "output CSV path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? exit_ok : exit_config;
    }

    try {
        if (bound->parsed()) return run_bound(bound_n, bound_vol, bound_sec, bound_eps, bound_json);
        if (netc->parsed()) return run_net(net_in, net_delta, net_eps, net_sec, net_out);
        if (ver->parsed())
            return run_verify(ver_in, ver_net, ver_delta, ver_eps, ver_sec, ver_pairs,
                              pairs_opt->count() > 0, ver_threads, ver_out, ver_csv);
        if (mc->parsed()) return run_model_check(mc_trials, mc_eps, mc_dim, mc_seed);
        if (sw->parsed())
            return run_sweep(sw_in, sw_eps_list, sw_sec, sw_n, sw_vol, sw_pairs,
                             sw_pairs_opt->count() > 0, sw_threads, sw_out);
        std::cout << app.help();
        return exit_ok;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_config;
    } catch (const DisconnectedGraph& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_config;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_io;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_io;
    } catch (const MetricViolation& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_io;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_config;
    }
}
