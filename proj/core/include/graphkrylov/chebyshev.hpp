#ifndef GRAPHKRYLOV_CHEBYSHEV_HPP
#define GRAPHKRYLOV_CHEBYSHEV_HPP

#include <cstddef>
#include <vector>

#include "graphkrylov/block_vector.hpp"
#include "graphkrylov/kernel_function.hpp"
#include "graphkrylov/op_counters.hpp"
#include "graphkrylov/sparse_matrix.hpp"

namespace graphkrylov {

/// Coefficients of the degree-m interpolant of phi at the Chebyshev-Lobatto
/// nodes x_j = (Lambda/2)(1 - cos(pi j / m)), expressed in the shifted basis
/// T_k(1 - 2 lambda / Lambda). The interpolation property (series equals phi
/// at every node) is the defining contract, checked by the tests.
struct ChebCoefficients {
    std::size_t degree = 0;
    std::vector<double> c;  // c_0..c_degree
    double lambda_max = 0.0;
};

/// Coefficients through the type-I discrete cosine transform with halved
/// endpoint terms and halved c_0, c_m.
ChebCoefficients cheb_coefficients(const KernelFunction& phi, double lambda_max,
                                   std::size_t m);

/// Clenshaw evaluation of the series at a scalar lambda in [0, Lambda].
double cheb_eval_scalar(const ChebCoefficients& coeffs, double lambda);

/// Block evaluation through the three-term recurrence on
/// S = I - (2/Lambda) L, retaining two block iterates. Trailing zero
/// coefficients are skipped, so a constant series costs no MV.
BlockVector cheb_apply(const SparseSymMatrix& l, const BlockVector& ew,
                       const ChebCoefficients& coeffs, OpCounters& counters);

/// PSD-enforcing variant: interpolate sqrt(phi) at degree floor(m/2) and
/// apply that polynomial twice. Throws NegativePhiAtNode when phi is
/// negative at an interpolation node.
BlockVector cheb_squared_apply(const SparseSymMatrix& l, const BlockVector& ew,
                               const KernelFunction& phi, double lambda_max,
                               std::size_t m, OpCounters& counters);

} // namespace graphkrylov

#endif
