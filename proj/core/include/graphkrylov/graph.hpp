#ifndef GRAPHKRYLOV_GRAPH_HPP
#define GRAPHKRYLOV_GRAPH_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <unordered_set>
#include <vector>

#include "graphkrylov/block_vector.hpp"
#include "graphkrylov/sparse_matrix.hpp"

namespace graphkrylov {

using Point2 = std::array<double, 2>;

/// Simple undirected weighted graph. Node indices are 0-based; edges carry
/// positive weights, self loops and duplicate edges are rejected.
class Graph {
public:
    struct Edge {
        std::size_t i;
        std::size_t j;
        double w;
    };

    explicit Graph(std::size_t node_count) : n_(node_count) {}

    std::size_t node_count() const { return n_; }
    const std::vector<Edge>& edges() const { return edges_; }

    void add_edge(std::size_t i, std::size_t j, double w = 1.0);

    bool has_coordinates() const { return !coords_.empty(); }
    const std::vector<Point2>& coordinates() const { return coords_; }
    void set_coordinates(std::vector<Point2> coords);

    std::vector<double> weighted_degrees() const;

private:
    std::size_t n_ = 0;
    std::vector<Edge> edges_;
    std::unordered_set<std::uint64_t> edge_keys_;
    std::vector<Point2> coords_;
};

/// Path on n nodes: edges (i, i+1) with unit weight.
Graph path_graph(std::size_t n);

/// Connects every pair at Euclidean distance strictly smaller than radius.
/// Coordinates are retained on the graph.
Graph proximity_graph(const std::vector<Point2>& points, double radius);

/// Seeded uniform-plus-cluster planar point cloud, the stand-in for the
/// reduced bunny scan: 6 Gaussian clusters (sigma 0.07, centers uniform in
/// [0.2, 0.8]^2) hold 75% of the points, the rest is uniform in the unit
/// square. SplitMix64 drives every draw.
std::vector<Point2> synthetic_point_cloud(std::size_t n, std::uint64_t seed);

enum class LaplacianKind { standard, normalized };

/// standard:    L = D - A
/// normalized:  D^{-1/2} (D - A) D^{-1/2}, isolated nodes give zero rows
SparseSymMatrix build_laplacian(const Graph& g, LaplacianKind kind);

/// Upper bound Lambda for the spectrum: exactly 2 for the normalized kind,
/// the Gershgorin row bound max_i sum_j |L_ij| otherwise.
double spectral_upper_bound(const SparseSymMatrix& l, LaplacianKind kind);

/// E_W: column i is the canonical basis vector of node w_i.
BlockVector unit_block(const std::vector<std::size_t>& nodes, std::size_t n);

/// Connected components; largest_component breaks size ties by smallest
/// contained node index.
std::vector<std::vector<std::size_t>> connected_components(const Graph& g);
std::vector<std::size_t> largest_component(const Graph& g);

/// Seeded sample of distinct nodes from the largest component. When the
/// graph carries coordinates and min_separation > 0, samples also keep
/// pairwise Euclidean distance >= min_separation (rejection sampling).
std::vector<std::size_t> sample_nodes(const Graph& g, std::size_t count,
                                      std::uint64_t seed, double min_separation = 0.0);

} // namespace graphkrylov

#endif
