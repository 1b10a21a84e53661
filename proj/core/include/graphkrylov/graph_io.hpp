#ifndef GRAPHKRYLOV_GRAPH_IO_HPP
#define GRAPHKRYLOV_GRAPH_IO_HPP

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "graphkrylov/diagnostics.hpp"
#include "graphkrylov/graph.hpp"
#include "graphkrylov/rls_predictor.hpp"

namespace graphkrylov {

/// Canonical decimal rendering (%.17g): value-preserving and byte-stable,
/// so identical runs emit identical files.
std::string format_double(double v);

/// Edge list: one `i j [w]` per line, whitespace separated, 0-based node
/// indices, `#` starts a comment. Missing weight means 1.
Graph read_edge_list(std::istream& in, std::size_t node_count);
Graph read_edge_list_file(const std::filesystem::path& path);
void write_edge_list(std::ostream& out, const Graph& g);

/// Point cloud: `x,y` per line, `#` comments.
std::vector<Point2> read_point_cloud(std::istream& in);
std::vector<Point2> read_point_cloud_file(const std::filesystem::path& path);
void write_point_cloud(std::ostream& out, const std::vector<Point2>& pts);

/// Labels: `node_index,value` per line, `#` comments. Order defines the
/// sampling set W.
void read_labels(std::istream& in, std::vector<std::size_t>& nodes,
                 std::vector<double>& values);
void read_labels_file(const std::filesystem::path& path, std::vector<std::size_t>& nodes,
                      std::vector<double>& values);
void write_labels(std::ostream& out, const std::vector<std::size_t>& nodes,
                  const std::vector<double>& values);

/// Kernel block signals: header `node,col_0..col_{N-1}`, one row per node.
void write_signals_csv(std::ostream& out, const BlockVector& block);

/// Convergence records:
/// method,m,error_fro,error_uniform,bound,mv,dot,axpy,predictor_error_uniform,predictor_ok
void write_convergence_csv(std::ostream& out, const std::vector<ConvergenceRecord>& records);
std::string convergence_json(const std::vector<ConvergenceRecord>& records);

/// Spectrum records: method,m,index,re,im,symmetry_defect
void write_spectrum_csv(std::ostream& out, const std::vector<SpectrumRecord>& records);
std::string spectrum_json(const std::vector<SpectrumRecord>& records);

/// Predictor: {method, m, gamma, coefficients[], signal[], residual_at_W}.
std::string predictor_json(const Predictor& p);

/// Classification: node,sign per row.
void write_classification_csv(std::ostream& out, const std::vector<int>& signs);

} // namespace graphkrylov

#endif
