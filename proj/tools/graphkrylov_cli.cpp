// Command line front end: graph/label ingestion, the kernel / predict /
// convergence / spectrum experiments, and plot-ready CSV/JSON emission.
//
// Exit codes: 0 ok, 2 configuration error, 3 numerical error.

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "graphkrylov/block_lanczos.hpp"
#include "graphkrylov/diagnostics.hpp"
#include "graphkrylov/errors.hpp"
#include "graphkrylov/graph.hpp"
#include "graphkrylov/graph_io.hpp"
#include "graphkrylov/kernel_function.hpp"
#include "graphkrylov/rls_predictor.hpp"
#include "graphkrylov/rng.hpp"
#include "graphkrylov/spectral_oracle.hpp"

namespace gk = graphkrylov;
namespace fs = std::filesystem;

namespace {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CommonOptions {
    std::string graph_spec;
    std::string laplacian = "normalized";
    std::string phi_kind = "diffusion";
    double t = 1.0;
    double eps = 0.05;
    double s = 2.0;
    std::string nodes_csv;
    std::size_t sample_count = 0;
    std::uint64_t seed = 1;
    std::string labels_spec;
    double gamma = 0.0;
    std::vector<std::string> methods{"cbl"};
    std::size_t m = 10;
    std::string m_range;
    std::string out_dir = ".";
    bool allow_singular = false;
    bool no_reorth = false;
};

struct LoadedGraph {
    gk::Graph graph{1};
    double proximity_radius = 0.0;  // > 0 when built from points
};

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) parts.push_back(item);
    return parts;
}

// path:N | edges:FILE | proximity:FILE:RADIUS | synthetic:N:SEED[:RADIUS]
LoadedGraph load_graph(const std::string& spec) {
    const auto parts = split(spec, ':');
    try {
        if (parts.size() == 2 && parts[0] == "path")
            return {gk::path_graph(std::stoul(parts[1])), 0.0};
        if (parts.size() == 2 && parts[0] == "edges")
            return {gk::read_edge_list_file(parts[1]), 0.0};
        if (parts.size() == 3 && parts[0] == "proximity") {
            const double radius = std::stod(parts[2]);
            return {gk::proximity_graph(gk::read_point_cloud_file(parts[1]), radius), radius};
        }
        if ((parts.size() == 3 || parts.size() == 4) && parts[0] == "synthetic") {
            const std::size_t n = std::stoul(parts[1]);
            const std::uint64_t seed = std::stoull(parts[2]);
            const double radius = parts.size() == 4 ? std::stod(parts[3]) : 0.045;
            return {gk::proximity_graph(gk::synthetic_point_cloud(n, seed), radius), radius};
        }
    } catch (const gk::Error&) {
        throw;
    } catch (const std::exception& e) {
        throw ConfigError("bad --graph spec '" + spec + "': " + e.what());
    }
    throw ConfigError("bad --graph spec '" + spec +
                      "' (expected path:N, edges:FILE, proximity:FILE:RADIUS or "
                      "synthetic:N:SEED[:RADIUS])");
}

gk::LaplacianKind laplacian_kind(const std::string& name) {
    if (name == "standard") return gk::LaplacianKind::standard;
    if (name == "normalized") return gk::LaplacianKind::normalized;
    throw ConfigError("bad --laplacian '" + name + "' (standard|normalized)");
}

gk::KernelFunction make_phi(const CommonOptions& opt) {
    if (opt.phi_kind == "diffusion") return gk::KernelFunction::diffusion(opt.t);
    if (opt.phi_kind == "spline") return gk::KernelFunction::variational_spline(opt.eps, opt.s);
    throw ConfigError("bad --phi '" + opt.phi_kind + "' (diffusion|spline)");
}

std::vector<std::size_t> resolve_nodes(const CommonOptions& opt, const LoadedGraph& lg) {
    if (!opt.nodes_csv.empty()) {
        std::vector<std::size_t> nodes;
        for (const auto& p : split(opt.nodes_csv, ',')) {
            try {
                nodes.push_back(std::stoul(p));
            } catch (const std::exception&) {
                throw ConfigError("bad --nodes entry '" + p + "'");
            }
        }
        return nodes;
    }
    if (opt.sample_count > 0) {
        // keep seeded samples inside the largest component and, on point
        // clouds, apart from each other (see README)
        const double separation = lg.proximity_radius * 1.5;
        return gk::sample_nodes(lg.graph, opt.sample_count, opt.seed, separation);
    }
    throw ConfigError("need --nodes or --sample");
}

// labels: FILE | random | random:SEED  (random draws 0/1 at the W nodes)
gk::TrainingSet resolve_training(const CommonOptions& opt, const LoadedGraph& lg,
                                 std::vector<std::size_t>& w_nodes) {
    gk::TrainingSet train;
    train.gamma = opt.gamma;
    if (opt.labels_spec.empty()) throw ConfigError("need --labels (FILE or random[:SEED])");
    const auto parts = split(opt.labels_spec, ':');
    if (parts[0] == "random") {
        if (w_nodes.empty()) w_nodes = resolve_nodes(opt, lg);
        const std::uint64_t label_seed =
            parts.size() > 1 ? std::stoull(parts[1]) : opt.seed + 1;
        gk::SplitMix64 rng(label_seed);
        train.nodes = w_nodes;
        for (std::size_t i = 0; i < w_nodes.size(); ++i)
            train.labels.push_back(static_cast<double>(rng.next_u64() & 1u));
        return train;
    }
    gk::read_labels_file(parts[0], train.nodes, train.labels);
    w_nodes = train.nodes;
    return train;
}

std::vector<std::size_t> resolve_m_values(const CommonOptions& opt) {
    if (!opt.m_range.empty()) {
        const auto pos = opt.m_range.find("..");
        if (pos == std::string::npos)
            throw ConfigError("bad --m-range '" + opt.m_range + "' (expected a..b)");
        try {
            const std::size_t a = std::stoul(opt.m_range.substr(0, pos));
            const std::size_t b = std::stoul(opt.m_range.substr(pos + 2));
            if (a == 0 || b < a) throw ConfigError("bad --m-range '" + opt.m_range + "'");
            std::vector<std::size_t> ms;
            for (std::size_t m = a; m <= b; ++m) ms.push_back(m);
            return ms;
        } catch (const ConfigError&) {
            throw;
        } catch (const std::exception&) {
            throw ConfigError("bad --m-range '" + opt.m_range + "'");
        }
    }
    if (opt.m == 0) throw ConfigError("--m must be >= 1");
    return {opt.m};
}

std::vector<gk::Method> resolve_methods(const CommonOptions& opt, bool allow_exact) {
    std::vector<gk::Method> out;
    for (const auto& name : opt.methods) {
        gk::Method m;
        try {
            m = gk::method_from_name(name);
        } catch (const gk::Error& e) {
            throw ConfigError(e.what());
        }
        if (m == gk::Method::exact && !allow_exact)
            throw ConfigError("method 'exact' is not valid for this subcommand");
        out.push_back(m);
    }
    if (out.empty()) throw ConfigError("need at least one --method");
    return out;
}

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw gk::Error("cannot open output file: " + path.string());
    out << content;
}

template <class Fn>
void write_stream(const fs::path& path, Fn&& fn) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw gk::Error("cannot open output file: " + path.string());
    fn(out);
}

void add_common(CLI::App* cmd, CommonOptions& opt, bool with_labels) {
    cmd->add_option("--graph", opt.graph_spec,
                    "path:N | edges:FILE | proximity:FILE:RADIUS | synthetic:N:SEED[:RADIUS]")
        ->required();
    cmd->add_option("--laplacian", opt.laplacian, "standard|normalized");
    cmd->add_option("--phi", opt.phi_kind, "diffusion|spline");
    cmd->add_option("--t", opt.t, "diffusion time parameter");
    cmd->add_option("--eps", opt.eps, "spline shift");
    cmd->add_option("--s", opt.s, "spline order");
    cmd->add_option("--nodes", opt.nodes_csv, "comma separated node list for W");
    cmd->add_option("--sample", opt.sample_count, "sample N nodes for W (seeded)");
    cmd->add_option("--seed", opt.seed, "seed for node sampling");
    cmd->add_option("--method", opt.methods, "cbl|gbl|sbl|cheb|cheb2|exact")
        ->delimiter(',');
    cmd->add_option("--m", opt.m, "iteration count / polynomial degree");
    cmd->add_option("--m-range", opt.m_range, "sweep a..b");
    cmd->add_option("--out", opt.out_dir, "output directory");
    cmd->add_flag("--no-reorth", opt.no_reorth, "disable full reorthogonalization (Lanczos)");
    if (with_labels) {
        cmd->add_option("--labels", opt.labels_spec, "labels CSV file, or random[:SEED]");
        cmd->add_option("--gamma", opt.gamma, "RLS regularization weight");
        cmd->add_flag("--allow-singular", opt.allow_singular,
                      "report a singular collocation instead of failing");
    }
}

// ---------------------------------------------------------------------------

int cmd_graph_info(const CommonOptions& opt) {
    const LoadedGraph lg = load_graph(opt.graph_spec);
    const gk::Graph& g = lg.graph;
    const auto kind = laplacian_kind(opt.laplacian);
    const gk::SparseSymMatrix lap = gk::build_laplacian(g, kind);
    const auto comps = gk::connected_components(g);
    std::size_t giant = 0;
    for (const auto& c : comps) giant = std::max(giant, c.size());
    const auto deg = g.weighted_degrees();
    double dmin = deg.empty() ? 0 : deg[0], dmax = 0, dsum = 0;
    for (double d : deg) {
        dmin = std::min(dmin, d);
        dmax = std::max(dmax, d);
        dsum += d;
    }
    std::cout << "nodes: " << g.node_count() << "\n"
              << "edges: " << g.edges().size() << "\n"
              << "components: " << comps.size() << "\n"
              << "largest_component: " << giant << "\n"
              << "degree_min: " << gk::format_double(dmin) << "\n"
              << "degree_max: " << gk::format_double(dmax) << "\n"
              << "degree_mean: "
              << gk::format_double(g.node_count() ? dsum / g.node_count() : 0.0) << "\n"
              << "laplacian: " << opt.laplacian << "\n"
              << "lambda_upper_bound: "
              << gk::format_double(gk::spectral_upper_bound(lap, kind)) << "\n";
    return 0;
}

int cmd_kernel(const CommonOptions& opt) {
    const LoadedGraph lg = load_graph(opt.graph_spec);
    const auto kind = laplacian_kind(opt.laplacian);
    const gk::SparseSymMatrix lap = gk::build_laplacian(lg.graph, kind);
    const double lambda_max = gk::spectral_upper_bound(lap, kind);
    const gk::KernelFunction phi = make_phi(opt);
    const std::vector<std::size_t> w = resolve_nodes(opt, lg);
    const auto methods = resolve_methods(opt, false);
    const auto m_values = resolve_m_values(opt);
    const gk::LanczosOptions lopt{!opt.no_reorth};

    std::optional<gk::BlockVector> exact;
    if (lap.dimension() <= gk::oracle_cap())
        exact = gk::exact_kernel_block(lap, phi, lambda_max, w);

    const fs::path out_dir(opt.out_dir);
    fs::create_directories(out_dir);
    std::ostringstream summary;
    summary << "{\n  \"runs\": [\n";
    bool first = true;
    for (gk::Method kr : methods) {
        for (std::size_t m : m_values) {
            gk::OpCounters counters;
            const gk::BlockVector block =
                gk::kernel_block_for_method(lap, phi, lambda_max, w, kr, m, counters, lopt);
            const std::string stem =
                "kernel_" + gk::method_name(kr) + "_m" + std::to_string(m);
            write_stream(out_dir / (stem + ".csv"),
                         [&](std::ostream& os) { gk::write_signals_csv(os, block); });
            double err_fro = -1.0, err_uni = -1.0;
            if (exact) {
                double fro = 0.0, uni = 0.0;
                for (std::size_t j = 0; j < block.cols(); ++j)
                    for (std::size_t i = 0; i < block.rows(); ++i) {
                        const double d = block(i, j) - (*exact)(i, j);
                        fro += d * d;
                        uni = std::max(uni, std::abs(d));
                    }
                err_fro = std::sqrt(fro);
                err_uni = uni;
            }
            if (!first) summary << ",\n";
            first = false;
            summary << "    {\"method\": \"" << gk::method_name(kr) << "\", \"m\": " << m
                    << ", \"mv\": " << counters.mv_count
                    << ", \"error_fro\": " << gk::format_double(err_fro)
                    << ", \"error_uniform\": " << gk::format_double(err_uni) << "}";
        }
    }
    summary << "\n  ]\n}\n";
    write_file(out_dir / "kernel_summary.json", summary.str());
    std::cout << "wrote " << (out_dir / "kernel_summary.json").string() << "\n";
    return 0;
}

int cmd_predict(CommonOptions& opt, bool hm_only) {
    const LoadedGraph lg = load_graph(opt.graph_spec);
    const auto kind = laplacian_kind(opt.laplacian);
    const gk::SparseSymMatrix lap = gk::build_laplacian(lg.graph, kind);
    const double lambda_max = gk::spectral_upper_bound(lap, kind);
    const gk::KernelFunction phi = make_phi(opt);
    std::vector<std::size_t> w;
    if (!opt.nodes_csv.empty() || opt.sample_count > 0) w = resolve_nodes(opt, lg);
    const gk::TrainingSet train = resolve_training(opt, lg, w);
    const auto methods = resolve_methods(opt, true);
    if (methods.size() != 1) throw ConfigError("predict takes exactly one --method");
    const gk::LanczosOptions lopt{!opt.no_reorth};

    const fs::path out_dir(opt.out_dir);
    fs::create_directories(out_dir);

    gk::Predictor pred;
    gk::OpCounters counters;
    try {
        if (methods[0] == gk::Method::exact) {
            pred = gk::predict_exact(lap, phi, lambda_max, train);
        } else if (hm_only) {
            if (methods[0] != gk::Method::cbl)
                throw ConfigError("--hm-only applies to --method cbl");
            pred = gk::predict_cbl_hm_only(lap, phi, lambda_max, train, opt.m, counters, lopt);
        } else {
            pred = gk::predict_krylov(lap, phi, lambda_max, train, methods[0], opt.m, counters,
                                      lopt);
        }
    } catch (const gk::NonInvertibleCollocation& e) {
        if (!opt.allow_singular) throw;
        write_file(out_dir / "predictor.json",
                   std::string("{\n  \"status\": \"singular_collocation\",\n  \"method\": \"") +
                       gk::method_name(methods[0]) + "\",\n  \"m\": " + std::to_string(opt.m) +
                       ",\n  \"detail\": \"" + e.what() + "\"\n}\n");
        std::cout << "singular collocation reported in predictor.json\n";
        return 0;
    }

    write_file(out_dir / "predictor.json", gk::predictor_json(pred) + "\n");
    write_stream(out_dir / "classification.csv", [&](std::ostream& os) {
        gk::write_classification_csv(os, gk::classify_sign(pred));
    });
    std::cout << "wrote " << (out_dir / "predictor.json").string()
              << " (residual_at_W = " << gk::format_double(pred.residual_at_w) << ")\n";
    return 0;
}

int cmd_convergence(CommonOptions& opt) {
    const LoadedGraph lg = load_graph(opt.graph_spec);
    const auto kind = laplacian_kind(opt.laplacian);
    const gk::SparseSymMatrix lap = gk::build_laplacian(lg.graph, kind);
    const double lambda_max = gk::spectral_upper_bound(lap, kind);
    const gk::KernelFunction phi = make_phi(opt);
    std::vector<std::size_t> w;
    std::optional<gk::TrainingSet> train;
    if (!opt.labels_spec.empty()) {
        train = resolve_training(opt, lg, w);
    } else {
        w = resolve_nodes(opt, lg);
    }
    const auto methods = resolve_methods(opt, false);
    const auto m_values = resolve_m_values(opt);
    const gk::LanczosOptions lopt{!opt.no_reorth};

    const auto records =
        gk::convergence_study(lap, phi, lambda_max, w, m_values, methods,
                              train ? &*train : nullptr, lopt);

    const fs::path out_dir(opt.out_dir);
    fs::create_directories(out_dir);
    write_stream(out_dir / "convergence.csv",
                 [&](std::ostream& os) { gk::write_convergence_csv(os, records); });
    write_file(out_dir / "convergence.json", gk::convergence_json(records) + "\n");
    std::cout << "wrote " << (out_dir / "convergence.csv").string() << " ("
              << records.size() << " records)\n";
    return 0;
}

int cmd_spectrum(CommonOptions& opt) {
    const LoadedGraph lg = load_graph(opt.graph_spec);
    const auto kind = laplacian_kind(opt.laplacian);
    const gk::SparseSymMatrix lap = gk::build_laplacian(lg.graph, kind);
    const double lambda_max = gk::spectral_upper_bound(lap, kind);
    const gk::KernelFunction phi = make_phi(opt);
    const std::vector<std::size_t> w = resolve_nodes(opt, lg);
    const auto methods = resolve_methods(opt, false);
    const gk::LanczosOptions lopt{!opt.no_reorth};

    const auto records =
        gk::collocation_spectrum_study(lap, phi, lambda_max, w, opt.m, methods, lopt);

    const fs::path out_dir(opt.out_dir);
    fs::create_directories(out_dir);
    write_stream(out_dir / "spectrum.csv",
                 [&](std::ostream& os) { gk::write_spectrum_csv(os, records); });
    write_file(out_dir / "spectrum.json", gk::spectrum_json(records) + "\n");
    std::cout << "wrote " << (out_dir / "spectrum.csv").string() << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"block Krylov approximation of graph kernels and RLS predictors"};
    app.require_subcommand(1);

    CommonOptions o_kernel, o_predict, o_conv, o_spec, o_info;
    bool hm_only = false;

    CLI::App* c_kernel = app.add_subcommand("kernel", "approximate phi(L) E_W");
    add_common(c_kernel, o_kernel, false);

    CLI::App* c_predict = app.add_subcommand("predict", "train an RLS kernel predictor");
    add_common(c_predict, o_predict, true);
    c_predict->add_flag("--hm-only", hm_only,
                        "cbl predictor through H_m only (never forms the kernel block)");

    CLI::App* c_conv = app.add_subcommand("convergence", "error sweep over m");
    add_common(c_conv, o_conv, true);

    CLI::App* c_spec = app.add_subcommand("spectrum", "collocation matrix eigenvalues");
    add_common(c_spec, o_spec, false);

    CLI::App* c_info = app.add_subcommand("graph-info", "graph and Laplacian summary");
    c_info->add_option("--graph", o_info.graph_spec, "graph spec")->required();
    c_info->add_option("--laplacian", o_info.laplacian, "standard|normalized");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (c_kernel->parsed()) return cmd_kernel(o_kernel);
        if (c_predict->parsed()) return cmd_predict(o_predict, hm_only);
        if (c_conv->parsed()) return cmd_convergence(o_conv);
        if (c_spec->parsed()) return cmd_spectrum(o_spec);
        if (c_info->parsed()) return cmd_graph_info(o_info);
    } catch (const ConfigError& e) {
        std::cerr << "config: " << e.what() << "\n";
        return 2;
    } catch (const gk::Error& e) {
        std::cerr << "compute: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
