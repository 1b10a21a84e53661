#ifndef GRAPHKRYLOV_BLOCK_VECTOR_HPP
#define GRAPHKRYLOV_BLOCK_VECTOR_HPP

#include <cmath>
#include <cstddef>
#include <vector>

#include "graphkrylov/dense_matrix.hpp"
#include "graphkrylov/errors.hpp"

namespace graphkrylov {

/// Dense n x N column block (E_W, Krylov basis blocks, kernel blocks).
/// Column-major; columns are contiguous.
class BlockVector {
public:
    BlockVector() = default;
    BlockVector(std::size_t n, std::size_t cols)
        : n_(n), cols_(cols), a_(n * cols, 0.0) {}

    std::size_t rows() const { return n_; }
    std::size_t cols() const { return cols_; }

    double& operator()(std::size_t i, std::size_t j) { return a_[j * n_ + i]; }
    double operator()(std::size_t i, std::size_t j) const { return a_[j * n_ + i]; }

    double* col(std::size_t j) { return a_.data() + j * n_; }
    const double* col(std::size_t j) const { return a_.data() + j * n_; }
    double* data() { return a_.data(); }
    const double* data() const { return a_.data(); }

    double frobenius_norm() const {
        double s = 0.0;
        for (double v : a_) s += v * v;
        return std::sqrt(s);
    }

    DenseMatrix to_dense() const {
        DenseMatrix m(n_, cols_);
        for (std::size_t k = 0; k < a_.size(); ++k) m.data()[k] = a_[k];
        return m;
    }

    static BlockVector from_dense(const DenseMatrix& m) {
        BlockVector b(m.rows(), m.cols());
        for (std::size_t k = 0; k < m.rows() * m.cols(); ++k) b.a_[k] = m.data()[k];
        return b;
    }

private:
    std::size_t n_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> a_;
};

/// a^T b as a small dense matrix (N_a x N_b Gram-type product).
inline DenseMatrix block_tn(const BlockVector& a, const BlockVector& b) {
    if (a.rows() != b.rows()) throw DimensionMismatch("block_tn: row counts differ");
    DenseMatrix c(a.cols(), b.cols());
    for (std::size_t j = 0; j < b.cols(); ++j) {
        const double* bj = b.col(j);
        for (std::size_t i = 0; i < a.cols(); ++i) {
            const double* ai = a.col(i);
            double s = 0.0;
            for (std::size_t k = 0; k < a.rows(); ++k) s += ai[k] * bj[k];
            c(i, j) = s;
        }
    }
    return c;
}

/// x += sign * q * h  (q: n x N, h: N x M, x: n x M)
inline void block_add_product(BlockVector& x, const BlockVector& q,
                              const DenseMatrix& h, double sign) {
    if (q.cols() != h.rows() || x.rows() != q.rows() || x.cols() != h.cols())
        throw DimensionMismatch("block_add_product: shapes differ");
    for (std::size_t j = 0; j < h.cols(); ++j) {
        double* xj = x.col(j);
        for (std::size_t k = 0; k < h.rows(); ++k) {
            const double f = sign * h(k, j);
            if (f == 0.0) continue;
            const double* qk = q.col(k);
            for (std::size_t i = 0; i < x.rows(); ++i) xj[i] += f * qk[i];
        }
    }
}

/// Frobenius inner product <a, b>_F = tr(b^T a).
inline double block_dot(const BlockVector& a, const BlockVector& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionMismatch("block_dot: shapes differ");
    double s = 0.0;
    const double* pa = a.data();
    const double* pb = b.data();
    for (std::size_t k = 0; k < a.rows() * a.cols(); ++k) s += pa[k] * pb[k];
    return s;
}

} // namespace graphkrylov

#endif
