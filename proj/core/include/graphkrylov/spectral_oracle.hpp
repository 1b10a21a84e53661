#ifndef GRAPHKRYLOV_SPECTRAL_ORACLE_HPP
#define GRAPHKRYLOV_SPECTRAL_ORACLE_HPP

#include <cstddef>
#include <vector>

#include "graphkrylov/block_vector.hpp"
#include "graphkrylov/dense_matrix.hpp"
#include "graphkrylov/kernel_function.hpp"
#include "graphkrylov/sparse_matrix.hpp"

namespace graphkrylov {

/// Node cap for the dense O(n^3) oracle. Default 2000; overridable through
/// the GRAPHKRYLOV_ORACLE_CAP environment variable.
std::size_t oracle_cap();

/// Ground-truth path: densify L once, full symmetric eigendecomposition,
/// then any phi(L)-derived quantity through the functional calculus.
/// Every iterative method in this library is validated against this object.
class DenseSpectralOracle {
public:
    explicit DenseSpectralOracle(const SparseSymMatrix& l);

    std::size_t dimension() const { return n_; }
    const std::vector<double>& eigenvalues() const { return eig_.eigenvalues; }

    /// phi(L) E_W, all n rows of the W columns.
    BlockVector kernel_block(const KernelFunction& phi, double lambda_max,
                             const std::vector<std::size_t>& w) const;

    /// E_W^T phi(L) E_W.
    DenseMatrix collocation(const KernelFunction& phi, double lambda_max,
                            const std::vector<std::size_t>& w) const;

private:
    std::vector<double> phi_values(const KernelFunction& phi, double lambda_max) const;

    std::size_t n_ = 0;
    SymEigDecomposition eig_;
};

BlockVector exact_kernel_block(const SparseSymMatrix& l, const KernelFunction& phi,
                               double lambda_max, const std::vector<std::size_t>& w);

DenseMatrix exact_collocation(const SparseSymMatrix& l, const KernelFunction& phi,
                              double lambda_max, const std::vector<std::size_t>& w);

} // namespace graphkrylov

#endif
