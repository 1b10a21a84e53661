#include "graphkrylov/graph_io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "graphkrylov/errors.hpp"

namespace graphkrylov {

namespace {

std::string strip_comment(const std::string& line) {
    const auto pos = line.find('#');
    return pos == std::string::npos ? line : line.substr(0, pos);
}

bool blank(const std::string& s) {
    return s.find_first_not_of(" \t\r\n") == std::string::npos;
}

std::ifstream open_input(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open file: " + path.string());
    return in;
}

nlohmann::json counters_json(const OpCounters& c) {
    return {{"mv", c.mv_count},
            {"dot", c.dot_count},
            {"axpy", c.axpy_count},
            {"small_eig_count", c.small_eig_count},
            {"small_eig_max_dim", c.small_eig_max_dim}};
}

} // namespace

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

Graph read_edge_list(std::istream& in, std::size_t node_count) {
    struct Entry {
        std::size_t i, j;
        double w;
    };
    std::vector<Entry> entries;
    std::size_t max_node = 0;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string body = strip_comment(line);
        if (blank(body)) continue;
        std::istringstream ss(body);
        long long i = -1, j = -1;
        double w = 1.0;
        if (!(ss >> i >> j))
            throw Error("edge list: malformed line " + std::to_string(lineno));
        ss >> w;  // optional
        if (i < 0 || j < 0) throw Error("edge list: negative node index at line " +
                                        std::to_string(lineno));
        entries.push_back({static_cast<std::size_t>(i), static_cast<std::size_t>(j), w});
        max_node = std::max({max_node, entries.back().i, entries.back().j});
    }
    const std::size_t n = node_count > 0 ? node_count : max_node + 1;
    Graph g(n);
    for (const auto& e : entries) g.add_edge(e.i, e.j, e.w);
    return g;
}

Graph read_edge_list_file(const std::filesystem::path& path) {
    auto in = open_input(path);
    return read_edge_list(in, 0);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << "# " << g.node_count() << " nodes, " << g.edges().size() << " edges\n";
    for (const auto& e : g.edges()) {
        out << e.i << ' ' << e.j;
        if (e.w != 1.0) out << ' ' << format_double(e.w);
        out << '\n';
    }
}

std::vector<Point2> read_point_cloud(std::istream& in) {
    std::vector<Point2> pts;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string body = strip_comment(line);
        if (blank(body)) continue;
        std::istringstream ss(body);
        double x, y;
        char comma;
        if (!(ss >> x >> comma >> y) || comma != ',')
            throw Error("point cloud: malformed line " + std::to_string(lineno));
        pts.push_back({x, y});
    }
    return pts;
}

std::vector<Point2> read_point_cloud_file(const std::filesystem::path& path) {
    auto in = open_input(path);
    return read_point_cloud(in);
}

void write_point_cloud(std::ostream& out, const std::vector<Point2>& pts) {
    for (const auto& p : pts) out << format_double(p[0]) << ',' << format_double(p[1]) << '\n';
}

void read_labels(std::istream& in, std::vector<std::size_t>& nodes,
                 std::vector<double>& values) {
    nodes.clear();
    values.clear();
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string body = strip_comment(line);
        if (blank(body)) continue;
        std::istringstream ss(body);
        long long node;
        double value;
        char comma;
        if (!(ss >> node >> comma >> value) || comma != ',' || node < 0)
            throw Error("labels: malformed line " + std::to_string(lineno));
        nodes.push_back(static_cast<std::size_t>(node));
        values.push_back(value);
    }
}

void read_labels_file(const std::filesystem::path& path, std::vector<std::size_t>& nodes,
                      std::vector<double>& values) {
    auto in = open_input(path);
    read_labels(in, nodes, values);
}

void write_labels(std::ostream& out, const std::vector<std::size_t>& nodes,
                  const std::vector<double>& values) {
    for (std::size_t i = 0; i < nodes.size(); ++i)
        out << nodes[i] << ',' << format_double(values[i]) << '\n';
}

void write_signals_csv(std::ostream& out, const BlockVector& block) {
    out << "node";
    for (std::size_t j = 0; j < block.cols(); ++j) out << ",col_" << j;
    out << '\n';
    for (std::size_t i = 0; i < block.rows(); ++i) {
        out << i;
        for (std::size_t j = 0; j < block.cols(); ++j) out << ',' << format_double(block(i, j));
        out << '\n';
    }
}

void write_convergence_csv(std::ostream& out, const std::vector<ConvergenceRecord>& records) {
    out << "method,m,error_fro,error_uniform,bound,mv,dot,axpy,"
           "predictor_error_uniform,predictor_ok\n";
    for (const auto& r : records) {
        out << method_name(r.method) << ',' << r.m << ',' << format_double(r.error_fro) << ','
            << format_double(r.error_uniform) << ',' << format_double(r.bound_value) << ','
            << r.counters.mv_count << ',' << r.counters.dot_count << ','
            << r.counters.axpy_count << ',' << format_double(r.predictor_error_uniform) << ','
            << (r.predictor_ok ? 1 : 0) << '\n';
    }
}

std::string convergence_json(const std::vector<ConvergenceRecord>& records) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : records) {
        arr.push_back({{"method", method_name(r.method)},
                       {"m", r.m},
                       {"error_fro", r.error_fro},
                       {"error_uniform", r.error_uniform},
                       {"bound", r.bound_value},
                       {"predictor_error_uniform", r.predictor_error_uniform},
                       {"predictor_ok", r.predictor_ok},
                       {"counters", counters_json(r.counters)}});
    }
    return nlohmann::json{{"records", arr}}.dump(2);
}

void write_spectrum_csv(std::ostream& out, const std::vector<SpectrumRecord>& records) {
    out << "method,m,index,re,im,symmetry_defect\n";
    for (const auto& r : records) {
        for (std::size_t k = 0; k < r.eigenvalues.size(); ++k) {
            out << method_name(r.method) << ',' << r.m << ',' << k << ','
                << format_double(r.eigenvalues[k].real()) << ','
                << format_double(r.eigenvalues[k].imag()) << ','
                << format_double(r.symmetry_defect) << '\n';
        }
    }
}

std::string spectrum_json(const std::vector<SpectrumRecord>& records) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : records) {
        nlohmann::json eigs = nlohmann::json::array();
        for (const auto& z : r.eigenvalues) eigs.push_back({{"re", z.real()}, {"im", z.imag()}});
        arr.push_back({{"method", method_name(r.method)},
                       {"m", r.m},
                       {"symmetry_defect", r.symmetry_defect},
                       {"eigenvalues", eigs}});
    }
    return nlohmann::json{{"records", arr}}.dump(2);
}

std::string predictor_json(const Predictor& p) {
    nlohmann::json j{{"method", method_name(p.method)},
                     {"m", p.m},
                     {"gamma", p.gamma},
                     {"coefficients", p.coefficients},
                     {"signal", p.signal},
                     {"residual_at_W", p.residual_at_w}};
    return j.dump(2);
}

void write_classification_csv(std::ostream& out, const std::vector<int>& signs) {
    out << "node,sign\n";
    for (std::size_t i = 0; i < signs.size(); ++i) out << i << ',' << signs[i] << '\n';
}

} // namespace graphkrylov
