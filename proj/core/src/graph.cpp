#include "graphkrylov/graph.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <unordered_set>

#include "graphkrylov/errors.hpp"
#include "graphkrylov/rng.hpp"

namespace graphkrylov {

void Graph::add_edge(std::size_t i, std::size_t j, double w) {
    if (i >= n_ || j >= n_) throw IndexOutOfRange("Graph::add_edge: node index out of range");
    if (i == j) throw Error("Graph::add_edge: self loops are not allowed");
    if (!(w > 0.0)) throw Error("Graph::add_edge: edge weight must be positive");
    const std::uint64_t key =
        static_cast<std::uint64_t>(std::min(i, j)) * n_ + std::max(i, j);
    if (!edge_keys_.insert(key).second)
        throw Error("Graph::add_edge: duplicate undirected edge");
    edges_.push_back({i, j, w});
}

void Graph::set_coordinates(std::vector<Point2> coords) {
    if (coords.size() != n_)
        throw DimensionMismatch("Graph::set_coordinates: coordinate count differs from node count");
    coords_ = std::move(coords);
}

std::vector<double> Graph::weighted_degrees() const {
    std::vector<double> deg(n_, 0.0);
    for (const Edge& e : edges_) {
        deg[e.i] += e.w;
        deg[e.j] += e.w;
    }
    return deg;
}

Graph path_graph(std::size_t n) {
    if (n == 0) throw Error("path_graph: need at least one node");
    Graph g(n);
    for (std::size_t i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1, 1.0);
    return g;
}

Graph proximity_graph(const std::vector<Point2>& points, double radius) {
    if (!(radius > 0.0)) throw Error("proximity_graph: radius must be positive");
    const std::size_t n = points.size();
    Graph g(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double dx = points[i][0] - points[j][0];
            const double dy = points[i][1] - points[j][1];
            if (std::sqrt(dx * dx + dy * dy) < radius) g.add_edge(i, j, 1.0);
        }
    }
    g.set_coordinates(points);
    return g;
}

std::vector<Point2> synthetic_point_cloud(std::size_t n, std::uint64_t seed) {
    SplitMix64 rng(seed);
    constexpr std::size_t n_clusters = 6;
    constexpr double sigma = 0.07;
    std::vector<Point2> centers;
    for (std::size_t c = 0; c < n_clusters; ++c)
        centers.push_back({0.2 + 0.6 * rng.next_double(), 0.2 + 0.6 * rng.next_double()});

    std::vector<Point2> pts;
    pts.reserve(n);
    const std::size_t per_cluster = (3 * n / 4) / n_clusters;
    for (const Point2& c : centers) {
        for (std::size_t k = 0; k < per_cluster && pts.size() < n; ++k) {
            // Box-Muller from two SplitMix64 uniforms
            const double u1 = std::max(rng.next_double(), 1e-300);
            const double u2 = rng.next_double();
            const double r = sigma * std::sqrt(-2.0 * std::log(u1));
            const double a = 2.0 * std::numbers::pi * u2;
            pts.push_back({c[0] + r * std::cos(a), c[1] + r * std::sin(a)});
        }
    }
    while (pts.size() < n) pts.push_back({rng.next_double(), rng.next_double()});
    return pts;
}

SparseSymMatrix build_laplacian(const Graph& g, LaplacianKind kind) {
    const std::size_t n = g.node_count();
    const std::vector<double> deg = g.weighted_degrees();
    std::vector<SparseSymMatrix::Entry> entries;
    entries.reserve(2 * g.edges().size() + n);

    if (kind == LaplacianKind::standard) {
        for (std::size_t i = 0; i < n; ++i)
            if (deg[i] != 0.0) entries.push_back({i, i, deg[i]});
        for (const auto& e : g.edges()) {
            entries.push_back({e.i, e.j, -e.w});
            entries.push_back({e.j, e.i, -e.w});
        }
    } else {
        // D^{-1/2} (D - A) D^{-1/2}; isolated nodes keep a zero row
        std::vector<double> dinv(n, 0.0);
        for (std::size_t i = 0; i < n; ++i)
            if (deg[i] > 0.0) dinv[i] = 1.0 / std::sqrt(deg[i]);
        for (std::size_t i = 0; i < n; ++i)
            if (deg[i] > 0.0) entries.push_back({i, i, 1.0});
        for (const auto& e : g.edges()) {
            const double v = -e.w * dinv[e.i] * dinv[e.j];
            entries.push_back({e.i, e.j, v});
            entries.push_back({e.j, e.i, v});
        }
    }
    return SparseSymMatrix::from_entries(n, entries);
}

double spectral_upper_bound(const SparseSymMatrix& l, LaplacianKind kind) {
    if (kind == LaplacianKind::normalized) return 2.0;
    double best = 0.0;
    const auto& rp = l.row_ptr();
    const auto& vals = l.values();
    for (std::size_t i = 0; i < l.dimension(); ++i) {
        double row = 0.0;
        for (std::size_t k = rp[i]; k < rp[i + 1]; ++k) row += std::abs(vals[k]);
        best = std::max(best, row);
    }
    return best;
}

BlockVector unit_block(const std::vector<std::size_t>& nodes, std::size_t n) {
    std::unordered_set<std::size_t> seen;
    for (std::size_t w : nodes) {
        if (w >= n) throw IndexOutOfRange("unit_block: node index out of range");
        if (!seen.insert(w).second) throw DuplicateNode("unit_block: duplicate node index");
    }
    BlockVector e(n, nodes.size());
    for (std::size_t j = 0; j < nodes.size(); ++j) e(nodes[j], j) = 1.0;
    return e;
}

std::vector<std::vector<std::size_t>> connected_components(const Graph& g) {
    const std::size_t n = g.node_count();
    std::vector<std::size_t> parent(n);
    for (std::size_t i = 0; i < n; ++i) parent[i] = i;
    auto find = [&](std::size_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    for (const auto& e : g.edges()) {
        const std::size_t a = find(e.i);
        const std::size_t b = find(e.j);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
    std::vector<std::vector<std::size_t>> groups(n);
    for (std::size_t i = 0; i < n; ++i) groups[find(i)].push_back(i);
    std::vector<std::vector<std::size_t>> out;
    for (auto& gr : groups)
        if (!gr.empty()) out.push_back(std::move(gr));
    return out;
}

std::vector<std::size_t> largest_component(const Graph& g) {
    auto comps = connected_components(g);
    if (comps.empty()) return {};
    std::size_t best = 0;
    for (std::size_t i = 1; i < comps.size(); ++i) {
        if (comps[i].size() > comps[best].size() ||
            (comps[i].size() == comps[best].size() && comps[i][0] < comps[best][0]))
            best = i;
    }
    return comps[best];
}

std::vector<std::size_t> sample_nodes(const Graph& g, std::size_t count,
                                      std::uint64_t seed, double min_separation) {
    const std::vector<std::size_t> pool = largest_component(g);
    if (count > pool.size())
        throw Error("sample_nodes: largest component smaller than requested sample");
    const bool use_sep = min_separation > 0.0 && g.has_coordinates();
    const auto& pts = g.coordinates();

    SplitMix64 rng(seed);
    std::vector<std::size_t> chosen;
    std::unordered_set<std::size_t> taken;
    std::size_t attempts = 0;
    const std::size_t max_attempts = 1000 * count + 1000;
    while (chosen.size() < count) {
        if (++attempts > max_attempts)
            throw Error("sample_nodes: could not place nodes at the requested separation");
        const std::size_t cand = pool[rng.next_index(pool.size())];
        if (taken.count(cand)) continue;
        if (use_sep) {
            bool ok = true;
            for (std::size_t c : chosen) {
                const double dx = pts[cand][0] - pts[c][0];
                const double dy = pts[cand][1] - pts[c][1];
                if (std::sqrt(dx * dx + dy * dy) < min_separation) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
        }
        taken.insert(cand);
        chosen.push_back(cand);
    }
    return chosen;
}

} // namespace graphkrylov
