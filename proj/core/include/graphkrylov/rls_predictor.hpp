#ifndef GRAPHKRYLOV_RLS_PREDICTOR_HPP
#define GRAPHKRYLOV_RLS_PREDICTOR_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "graphkrylov/block_lanczos.hpp"
#include "graphkrylov/block_vector.hpp"
#include "graphkrylov/dense_matrix.hpp"
#include "graphkrylov/kernel_function.hpp"
#include "graphkrylov/sparse_matrix.hpp"

namespace graphkrylov {

/// Labeled sample: N distinct nodes, their values, and the RLS
/// regularization weight gamma >= 0 (the system matrix is K_W + gamma N I).
struct TrainingSet {
    std::vector<std::size_t> nodes;
    std::vector<double> labels;
    double gamma = 0.0;
};

enum class Method { exact, cbl, gbl, sbl, cheb, cheb2 };

std::string method_name(Method m);
Method method_from_name(const std::string& name);

struct Predictor {
    Method method = Method::exact;
    std::size_t m = 0;  // 0 for the exact predictor
    double gamma = 0.0;
    std::vector<double> coefficients;  // N
    std::vector<double> signal;        // n
    double residual_at_w = 0.0;        // max_i |signal(w_i) - y_i|
};

/// Solves (K_W + gamma N I) c = y. Throws NonInvertibleCollocation when the
/// system is singular, a legal outcome for gbl/sbl/cheb at small m.
std::vector<double> rls_coefficients(const DenseMatrix& collocation, double gamma,
                                     const std::vector<double>& y);

/// p^(kr)(L) E_W for one iterative method tag; the common dispatch used by
/// the predictors and the diagnostic studies.
BlockVector kernel_block_for_method(const SparseSymMatrix& l, const KernelFunction& phi,
                                    double lambda_max, const std::vector<std::size_t>& w,
                                    Method kr, std::size_t m, OpCounters& counters,
                                    const LanczosOptions& options = {});

/// Dense-oracle predictor; with gamma = 0 it interpolates the labels.
Predictor predict_exact(const SparseSymMatrix& l, const KernelFunction& phi,
                        double lambda_max, const TrainingSet& train);

/// Builds the method's kernel block p(L) E_W, solves the perturbed RLS
/// system, and returns the signal block * c.
Predictor predict_krylov(const SparseSymMatrix& l, const KernelFunction& phi,
                         double lambda_max, const TrainingSet& train, Method kr,
                         std::size_t m, OpCounters& counters,
                         const LanczosOptions& options = {});

/// Algorithm: one classical factorization; solve with F_1^T phi(H_m) F_1 and
/// expand y = [Q] phi(H_m) F_1 c. Never materializes p(L) E_W and never
/// fails for positive phi (the system matrix is SPD for every m >= 1).
Predictor predict_cbl_hm_only(const SparseSymMatrix& l, const KernelFunction& phi,
                              double lambda_max, const TrainingSet& train, std::size_t m,
                              OpCounters& counters, const LanczosOptions& options = {});

/// sign(signal) per node; exact zeros map to +1.
std::vector<int> classify_sign(const Predictor& p);

} // namespace graphkrylov

#endif
