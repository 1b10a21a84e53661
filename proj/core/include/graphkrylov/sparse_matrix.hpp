#ifndef GRAPHKRYLOV_SPARSE_MATRIX_HPP
#define GRAPHKRYLOV_SPARSE_MATRIX_HPP

#include <cstddef>
#include <vector>

#include "graphkrylov/block_vector.hpp"
#include "graphkrylov/dense_matrix.hpp"
#include "graphkrylov/op_counters.hpp"

namespace graphkrylov {

/// Symmetric sparse operator in CSR form, both triangles stored.
/// Immutable after construction; safe for concurrent reads.
class SparseSymMatrix {
public:
    struct Entry {
        std::size_t row;
        std::size_t col;
        double value;
    };

    SparseSymMatrix() = default;  // empty 0-dimensional operator

    /// Builds from entries; duplicates are summed, explicit zeros dropped,
    /// and structural symmetry is verified.
    static SparseSymMatrix from_entries(std::size_t n, const std::vector<Entry>& entries);

    std::size_t dimension() const { return n_; }
    std::size_t stored_nonzeros() const { return values_.size(); }

    const std::vector<std::size_t>& row_ptr() const { return row_ptr_; }
    const std::vector<std::size_t>& col_idx() const { return col_idx_; }
    const std::vector<double>& values() const { return values_; }

    /// y = L x for one length-n column; no counting here.
    void multiply(const double* x, double* y) const;

    DenseMatrix to_dense() const;

private:
    std::size_t n_ = 0;
    std::vector<std::size_t> row_ptr_;
    std::vector<std::size_t> col_idx_;
    std::vector<double> values_;
};

/// Result = L * X; counts one MV per column of X.
BlockVector spmv_block(const SparseSymMatrix& l, const BlockVector& x, OpCounters& counters);

} // namespace graphkrylov

#endif
