#ifndef GRAPHKRYLOV_BLOCK_LANCZOS_HPP
#define GRAPHKRYLOV_BLOCK_LANCZOS_HPP

#include <cstddef>
#include <vector>

#include "graphkrylov/block_vector.hpp"
#include "graphkrylov/dense_matrix.hpp"
#include "graphkrylov/kernel_function.hpp"
#include "graphkrylov/op_counters.hpp"
#include "graphkrylov/sparse_matrix.hpp"

namespace graphkrylov {

struct LanczosOptions {
    /// Re-project the candidate block against every previous basis block.
    /// On by default: once Ritz pairs converge, the plain recurrence loses
    /// orthogonality and the block QR turns residual noise into spurious
    /// directions, which breaks invariant-subspace termination, polynomial
    /// exactness and eventually the spectrum containment of H_m. At desk
    /// scale the extra cost is negligible; switch off to study the plain
    /// recurrence.
    bool reorthogonalize = true;
};

/// Classical block Lanczos factorization after effective_m steps:
/// orthonormal basis blocks Q_1..Q_m and the symmetric block tridiagonal
/// H_m = [Q]^T L [Q]. Breakdown (rank-deficient next block) truncates the
/// iteration; on the reached invariant subspace the approximation is exact.
struct ClassicalFactorization {
    std::vector<BlockVector> basis;  // Q_1..Q_effective_m, each n x N
    DenseMatrix h;                   // (effective_m * N) square
    std::size_t block_size = 0;
    std::size_t effective_m = 0;
    bool truncated = false;
};

/// Frobenius-orthonormal variant: Q_1 = E_W / sqrt(N), scalar recurrence
/// entries, tridiagonal H_m of size effective_m.
struct GlobalFactorization {
    std::vector<BlockVector> basis;
    std::vector<double> diag;     // h_{k,k}
    std::vector<double> subdiag;  // h_{k+1,k}
    std::size_t block_size = 0;
    std::size_t effective_m = 0;
    bool truncated = false;
};

/// Algorithm: X = L Q_k - Q_{k-1} H_{k-1,k}; H_{k,k} = Q_k^T X (symmetrized);
/// X -= Q_k H_{k,k}; reduced QR of X yields Q_{k+1} and H_{k+1,k}.
/// Requires orthonormal starting columns (unit blocks qualify); mN should
/// stay within the reachable subspace dimension (mN <= n). Truncation on a
/// fully collapsed block is exact; a merely rank-deficient block (one
/// column's space saturating first) also truncates, and the result is then
/// the approximation on the subspace reached so far.
ClassicalFactorization classical_block_lanczos(const SparseSymMatrix& l,
                                               const BlockVector& ew, std::size_t m,
                                               OpCounters& counters,
                                               const LanczosOptions& options = {});

/// [Q_1..Q_m] * (phi(H_m) F_1).
BlockVector cbl_approximate(const ClassicalFactorization& fact, const KernelFunction& phi,
                            double lambda_max, OpCounters& counters);

/// F_1^T phi(H_m) F_1: the collocation matrix of the cbl kernel without ever
/// touching the length-n block. Symmetric positive definite for positive phi.
DenseMatrix collocation_via_hm(const ClassicalFactorization& fact, const KernelFunction& phi,
                               double lambda_max, OpCounters& counters);

GlobalFactorization global_block_lanczos(const SparseSymMatrix& l, const BlockVector& ew,
                                         std::size_t m, OpCounters& counters);

/// sum_k u_k Q_k with u = sqrt(N) phi(H_m) f_1.
BlockVector gbl_approximate(const GlobalFactorization& fact, const KernelFunction& phi,
                            double lambda_max, OpCounters& counters);

/// Ordinary Lanczos applied independently to each column of E_W; only one
/// column's basis is alive at a time. Per-column breakdown truncates that
/// column only.
BlockVector sequential_lanczos_approximate(const SparseSymMatrix& l, const BlockVector& ew,
                                           std::size_t m, const KernelFunction& phi,
                                           double lambda_max, OpCounters& counters,
                                           const LanczosOptions& options = {});

} // namespace graphkrylov

#endif
