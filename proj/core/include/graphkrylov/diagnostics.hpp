#ifndef GRAPHKRYLOV_DIAGNOSTICS_HPP
#define GRAPHKRYLOV_DIAGNOSTICS_HPP

#include <complex>
#include <cstddef>
#include <vector>

#include "graphkrylov/block_lanczos.hpp"
#include "graphkrylov/kernel_function.hpp"
#include "graphkrylov/op_counters.hpp"
#include "graphkrylov/rls_predictor.hpp"
#include "graphkrylov/sparse_matrix.hpp"

namespace graphkrylov {

/// Upper proxy for the best uniform polynomial approximation error E_m(phi)
/// on [0, Lambda]: the uniform error of the degree-m Chebyshev-Lobatto
/// interpolant, measured on a 64(m+1)-point Chebyshev-distributed grid. It
/// satisfies E_m <= estimate <= (2 + (2/pi) log(m+1)) E_m. For the built-in
/// kernel kinds the computation runs in extended precision, which keeps the
/// estimate meaningful far below the double roundoff floor.
double best_approx_estimate(const KernelFunction& phi, double lambda_max, std::size_t m);

/// E_m(e^{-t lambda}) bound with b = (sqrt(5)-1)/2 and d = (sqrt(5)-2) e^b:
///   m <= t Lambda:  2 e^{-b(m+1)^2/(t Lambda)} (1 + sqrt(t Lambda pi/(4b)))
///                     + 2 d^{t Lambda} / (1 - d)
///   m >  t Lambda:  2 d^m / (1 - d)
double stewart_leyk_bound(double t, double lambda_max, std::size_t m);

/// 2 sqrt(N) E.
double lanczos_error_bound(std::size_t block_size, double e_hat);

/// sqrt(N) (2 + (2/pi) log(m+1)) E.
double cheb_error_bound(std::size_t block_size, std::size_t m, double e_hat);

/// One sweep point of a convergence study. The bound column follows the
/// block-count convention: a Lanczos run with m blocks carries a degree-m-1
/// approximant, so its bound uses the estimate at degree m-1; cheb at m is
/// the degree-m interpolant. cheb2 carries the derived bound
/// sqrt(N) Leb(mh) E_mh(sqrt(phi)) (2 max sqrt(phi) + Leb(mh) E_mh(sqrt(phi))),
/// mh = floor(m/2).
struct ConvergenceRecord {
    Method method = Method::cbl;
    std::size_t m = 0;
    double error_fro = 0.0;
    double error_uniform = 0.0;
    double bound_value = 0.0;
    double predictor_error_uniform = 0.0;  // NaN when no training set given
    bool predictor_ok = true;              // false: NonInvertibleCollocation
    OpCounters counters;
};

/// Errors of every (method, m) pair against the dense oracle; fresh counters
/// per run. With a training set, the gamma-regularized predictors are also
/// compared against the exact predictor in the uniform norm, and a singular
/// collocation is recorded as an outcome rather than thrown.
std::vector<ConvergenceRecord> convergence_study(
    const SparseSymMatrix& l, const KernelFunction& phi, double lambda_max,
    const std::vector<std::size_t>& w, const std::vector<std::size_t>& m_values,
    const std::vector<Method>& methods, const TrainingSet* train = nullptr,
    const LanczosOptions& options = {});

struct SpectrumRecord {
    Method method = Method::cbl;
    std::size_t m = 0;
    std::vector<std::complex<double>> eigenvalues;
    double symmetry_defect = 0.0;  // |K - K^T|_F
};

/// Eigenvalues of E_W^T p^(kr)(L) E_W per method; sym_eig when the defect is
/// negligible, the general (possibly complex) solver otherwise.
std::vector<SpectrumRecord> collocation_spectrum_study(
    const SparseSymMatrix& l, const KernelFunction& phi, double lambda_max,
    const std::vector<std::size_t>& w, std::size_t m, const std::vector<Method>& methods,
    const LanczosOptions& options = {});

} // namespace graphkrylov

#endif
