#include "graphkrylov/sparse_matrix.hpp"

#include <algorithm>
#include <map>

#include "graphkrylov/errors.hpp"

namespace graphkrylov {

SparseSymMatrix SparseSymMatrix::from_entries(std::size_t n,
                                              const std::vector<Entry>& entries) {
    std::map<std::pair<std::size_t, std::size_t>, double> acc;
    for (const Entry& e : entries) {
        if (e.row >= n || e.col >= n)
            throw IndexOutOfRange("SparseSymMatrix: entry index out of range");
        acc[{e.row, e.col}] += e.value;
    }
    for (const auto& [key, value] : acc) {
        auto it = acc.find({key.second, key.first});
        if (it == acc.end() || it->second != value)
            throw NotSymmetric("SparseSymMatrix: entries are not symmetric");
    }

    SparseSymMatrix m;
    m.n_ = n;
    m.row_ptr_.assign(n + 1, 0);
    for (const auto& [key, value] : acc)
        if (value != 0.0) ++m.row_ptr_[key.first + 1];
    for (std::size_t i = 0; i < n; ++i) m.row_ptr_[i + 1] += m.row_ptr_[i];
    m.col_idx_.resize(m.row_ptr_[n]);
    m.values_.resize(m.row_ptr_[n]);
    std::vector<std::size_t> cursor(m.row_ptr_.begin(), m.row_ptr_.end() - 1);
    for (const auto& [key, value] : acc) {
        if (value == 0.0) continue;
        const std::size_t k = cursor[key.first]++;
        m.col_idx_[k] = key.second;
        m.values_[k] = value;
    }
    return m;
}

void SparseSymMatrix::multiply(const double* x, double* y) const {
    for (std::size_t i = 0; i < n_; ++i) {
        double s = 0.0;
        for (std::size_t k = row_ptr_[i]; k < row_ptr_[i + 1]; ++k)
            s += values_[k] * x[col_idx_[k]];
        y[i] = s;
    }
}

DenseMatrix SparseSymMatrix::to_dense() const {
    DenseMatrix d(n_, n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t k = row_ptr_[i]; k < row_ptr_[i + 1]; ++k)
            d(i, col_idx_[k]) = values_[k];
    return d;
}

BlockVector spmv_block(const SparseSymMatrix& l, const BlockVector& x, OpCounters& counters) {
    if (l.dimension() != x.rows())
        throw DimensionMismatch("spmv_block: operator and block dimensions differ");
    BlockVector y(x.rows(), x.cols());
    for (std::size_t j = 0; j < x.cols(); ++j) l.multiply(x.col(j), y.col(j));
    counters.mv_count += x.cols();
    return y;
}

} // namespace graphkrylov
