#include "graphkrylov/block_lanczos.hpp"

#include <algorithm>
#include <cmath>

#include "graphkrylov/errors.hpp"

namespace graphkrylov {

namespace {

void check_orthonormal_start(const BlockVector& ew) {
    const DenseMatrix g = block_tn(ew, ew);
    double defect = 0.0;
    for (std::size_t j = 0; j < g.cols(); ++j)
        for (std::size_t i = 0; i < g.rows(); ++i) {
            const double d = g(i, j) - (i == j ? 1.0 : 0.0);
            defect += d * d;
        }
    if (std::sqrt(defect) > 1e-10)
        throw Error("classical_block_lanczos: starting block columns must be orthonormal");
}

void full_reorthogonalize(BlockVector& x, const std::vector<BlockVector>& basis,
                          OpCounters& counters) {
    const std::size_t N = x.cols();
    for (const BlockVector& q : basis) {
        const DenseMatrix proj = block_tn(q, x);
        block_add_product(x, q, proj, -1.0);
        counters.dot_count += q.cols() * N;
        counters.axpy_count += q.cols() * N;
    }
}

void note_small_eig(OpCounters& counters, std::size_t dim) {
    counters.small_eig_count += 1;
    counters.small_eig_max_dim = std::max<std::uint64_t>(counters.small_eig_max_dim, dim);
}

} // namespace

ClassicalFactorization classical_block_lanczos(const SparseSymMatrix& l,
                                               const BlockVector& ew, std::size_t m,
                                               OpCounters& counters,
                                               const LanczosOptions& options) {
    if (m == 0) throw Error("classical_block_lanczos: m must be >= 1");
    if (l.dimension() != ew.rows())
        throw DimensionMismatch("classical_block_lanczos: operator and block differ");
    check_orthonormal_start(ew);

    const std::size_t N = ew.cols();
    ClassicalFactorization fact;
    fact.block_size = N;
    fact.basis.push_back(ew);

    std::vector<DenseMatrix> h_diag;      // H_{k,k}
    std::vector<DenseMatrix> h_sub;       // H_{k+1,k}, upper triangular
    double scale = 1e-300;                // running |L Q_k| estimate

    for (std::size_t k = 1; k <= m; ++k) {
        const BlockVector& qk = fact.basis[k - 1];
        BlockVector x = spmv_block(l, qk, counters);
        scale = std::max(scale, x.frobenius_norm());
        if (k > 1) {
            // X -= Q_{k-1} H_{k-1,k}  with  H_{k-1,k} = H_{k,k-1}^T
            block_add_product(x, fact.basis[k - 2], h_sub[k - 2].transposed(), -1.0);
            counters.axpy_count += N * N;
        }
        DenseMatrix hkk = block_tn(qk, x);
        counters.dot_count += N * N;
        for (std::size_t j = 0; j < N; ++j)      // exact symmetry only holds
            for (std::size_t i = 0; i < j; ++i)  // in exact arithmetic
            {
                const double v = 0.5 * (hkk(i, j) + hkk(j, i));
                hkk(i, j) = hkk(j, i) = v;
            }
        block_add_product(x, qk, hkk, -1.0);
        counters.axpy_count += N * N;
        if (options.reorthogonalize) full_reorthogonalize(x, fact.basis, counters);
        h_diag.push_back(std::move(hkk));
        if (k == m) break;

        QrResult qr = reduced_qr(x.to_dense());
        counters.dot_count += N * (N + 1) / 2;
        counters.axpy_count += N * (N + 1) / 2;
        // deficiency relative to the candidate block itself (partial rank
        // loss) or to the iteration scale (invariant subspace reached)
        bool collapsed = qr.deficient;
        for (std::size_t j = 0; j < N; ++j)
            if (std::abs(qr.r(j, j)) <= kTolRank * scale) collapsed = true;
        if (collapsed) {
            fact.truncated = true;
            break;
        }
        fact.basis.push_back(BlockVector::from_dense(qr.q));
        h_sub.push_back(std::move(qr.r));
    }

    const std::size_t meff = h_diag.size();
    fact.effective_m = meff;
    fact.basis.resize(meff);
    fact.h = DenseMatrix(meff * N, meff * N);
    for (std::size_t k = 0; k < meff; ++k) {
        for (std::size_t j = 0; j < N; ++j)
            for (std::size_t i = 0; i < N; ++i) {
                fact.h(k * N + i, k * N + j) = h_diag[k](i, j);
                if (k + 1 < meff) {
                    fact.h((k + 1) * N + i, k * N + j) = h_sub[k](i, j);
                    fact.h(k * N + j, (k + 1) * N + i) = h_sub[k](i, j);
                }
            }
    }
    return fact;
}

BlockVector cbl_approximate(const ClassicalFactorization& fact, const KernelFunction& phi,
                            double lambda_max, OpCounters& counters) {
    const std::size_t N = fact.block_size;
    const std::size_t meff = fact.effective_m;
    const DenseMatrix phi_h = matrix_function(fact.h, phi, lambda_max);
    note_small_eig(counters, meff * N);

    // U = phi(H_m) F_1: the leading N columns
    BlockVector out(fact.basis.front().rows(), N);
    DenseMatrix slice(N, N);
    for (std::size_t k = 0; k < meff; ++k) {
        for (std::size_t j = 0; j < N; ++j)
            for (std::size_t i = 0; i < N; ++i) slice(i, j) = phi_h(k * N + i, j);
        block_add_product(out, fact.basis[k], slice, 1.0);
    }
    counters.axpy_count += meff * N * N;
    return out;
}

DenseMatrix collocation_via_hm(const ClassicalFactorization& fact, const KernelFunction& phi,
                               double lambda_max, OpCounters& counters) {
    const std::size_t N = fact.block_size;
    const DenseMatrix phi_h = matrix_function(fact.h, phi, lambda_max);
    note_small_eig(counters, fact.effective_m * N);
    DenseMatrix k(N, N);
    for (std::size_t j = 0; j < N; ++j)
        for (std::size_t i = 0; i < N; ++i) k(i, j) = phi_h(i, j);
    return k;
}

GlobalFactorization global_block_lanczos(const SparseSymMatrix& l, const BlockVector& ew,
                                         std::size_t m, OpCounters& counters) {
    if (m == 0) throw Error("global_block_lanczos: m must be >= 1");
    if (l.dimension() != ew.rows())
        throw DimensionMismatch("global_block_lanczos: operator and block differ");
    const double ew_norm = ew.frobenius_norm();
    if (ew_norm == 0.0) throw Error("global_block_lanczos: starting block is zero");

    const std::size_t n = ew.rows();
    const std::size_t N = ew.cols();
    GlobalFactorization fact;
    fact.block_size = N;

    BlockVector q1(n, N);
    const double inv = 1.0 / std::sqrt(static_cast<double>(N));
    for (std::size_t k = 0; k < n * N; ++k) q1.data()[k] = ew.data()[k] * inv;
    fact.basis.push_back(std::move(q1));

    double scale = 0.0;  // running estimate of |L| for the breakdown test
    for (std::size_t k = 1; k <= m; ++k) {
        const BlockVector& qk = fact.basis[k - 1];
        BlockVector x = spmv_block(l, qk, counters);
        if (k > 1) {
            const double h = fact.subdiag[k - 2];
            const BlockVector& qp = fact.basis[k - 2];
            for (std::size_t t = 0; t < n * N; ++t) x.data()[t] -= h * qp.data()[t];
            counters.axpy_count += N;
        }
        const double hkk = block_dot(qk, x);
        counters.dot_count += N;
        for (std::size_t t = 0; t < n * N; ++t) x.data()[t] -= hkk * qk.data()[t];
        counters.axpy_count += N;
        fact.diag.push_back(hkk);
        scale = std::max({scale, std::abs(hkk), 1e-300});
        if (k == m) break;

        const double h = x.frobenius_norm();
        counters.dot_count += N;
        if (h <= kTolRank * scale) {
            fact.truncated = true;
            break;
        }
        scale = std::max(scale, h);
        BlockVector next(n, N);
        for (std::size_t t = 0; t < n * N; ++t) next.data()[t] = x.data()[t] / h;
        fact.basis.push_back(std::move(next));
        fact.subdiag.push_back(h);
    }
    fact.effective_m = fact.diag.size();
    fact.basis.resize(fact.effective_m);
    return fact;
}

BlockVector gbl_approximate(const GlobalFactorization& fact, const KernelFunction& phi,
                            double lambda_max, OpCounters& counters) {
    const std::size_t meff = fact.effective_m;
    const std::size_t N = fact.block_size;
    const std::size_t n = fact.basis.front().rows();

    DenseMatrix h(meff, meff);
    for (std::size_t k = 0; k < meff; ++k) {
        h(k, k) = fact.diag[k];
        if (k + 1 < meff) {
            h(k + 1, k) = fact.subdiag[k];
            h(k, k + 1) = fact.subdiag[k];
        }
    }
    const DenseMatrix phi_h = matrix_function(h, phi, lambda_max);
    note_small_eig(counters, meff);

    // u = sqrt(N) phi(H_m) f_1,  result = sum_k u_k Q_k
    const double root_n = std::sqrt(static_cast<double>(N));
    BlockVector out(n, N);
    for (std::size_t k = 0; k < meff; ++k) {
        const double uk = root_n * phi_h(k, 0);
        const BlockVector& qk = fact.basis[k];
        for (std::size_t t = 0; t < n * N; ++t) out.data()[t] += uk * qk.data()[t];
    }
    counters.axpy_count += meff * N;
    return out;
}

BlockVector sequential_lanczos_approximate(const SparseSymMatrix& l, const BlockVector& ew,
                                           std::size_t m, const KernelFunction& phi,
                                           double lambda_max, OpCounters& counters,
                                           const LanczosOptions& options) {
    if (m == 0) throw Error("sequential_lanczos_approximate: m must be >= 1");
    const std::size_t n = ew.rows();
    const std::size_t N = ew.cols();
    BlockVector out(n, N);
    for (std::size_t j = 0; j < N; ++j) {
        BlockVector column(n, 1);
        std::copy(ew.col(j), ew.col(j) + n, column.col(0));
        const ClassicalFactorization fact =
            classical_block_lanczos(l, column, m, counters, options);
        const BlockVector approx = cbl_approximate(fact, phi, lambda_max, counters);
        std::copy(approx.col(0), approx.col(0) + n, out.col(j));
    }
    return out;
}

} // namespace graphkrylov
