#include "graphkrylov/rls_predictor.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "graphkrylov/chebyshev.hpp"
#include "graphkrylov/errors.hpp"
#include "graphkrylov/graph.hpp"
#include "graphkrylov/spectral_oracle.hpp"

namespace graphkrylov {

std::string method_name(Method m) {
    switch (m) {
        case Method::exact: return "exact";
        case Method::cbl: return "cbl";
        case Method::gbl: return "gbl";
        case Method::sbl: return "sbl";
        case Method::cheb: return "cheb";
        case Method::cheb2: return "cheb2";
    }
    return "?";
}

Method method_from_name(const std::string& name) {
    if (name == "exact") return Method::exact;
    if (name == "cbl") return Method::cbl;
    if (name == "gbl") return Method::gbl;
    if (name == "sbl") return Method::sbl;
    if (name == "cheb") return Method::cheb;
    if (name == "cheb2" || name == "cheb^2") return Method::cheb2;
    throw Error("unknown method name: " + name);
}

namespace {

void validate_training_set(const TrainingSet& train, std::size_t n) {
    if (train.nodes.empty()) throw Error("training set: need at least one node");
    if (train.nodes.size() != train.labels.size())
        throw DimensionMismatch("training set: node and label counts differ");
    if (train.gamma < 0.0) throw Error("training set: gamma must be >= 0");
    std::unordered_set<std::size_t> seen;
    for (std::size_t w : train.nodes) {
        if (w >= n) throw IndexOutOfRange("training set: node index out of range");
        if (!seen.insert(w).second) throw DuplicateNode("training set: duplicate node");
    }
}

double residual_at_nodes(const std::vector<double>& signal, const TrainingSet& train) {
    double r = 0.0;
    for (std::size_t i = 0; i < train.nodes.size(); ++i)
        r = std::max(r, std::abs(signal[train.nodes[i]] - train.labels[i]));
    return r;
}

Predictor assemble(Method kr, std::size_t m, const TrainingSet& train,
                   const BlockVector& block, std::vector<double> coeffs) {
    Predictor p;
    p.method = kr;
    p.m = m;
    p.gamma = train.gamma;
    p.coefficients = std::move(coeffs);
    p.signal.assign(block.rows(), 0.0);
    for (std::size_t j = 0; j < block.cols(); ++j) {
        const double cj = p.coefficients[j];
        const double* bj = block.col(j);
        for (std::size_t i = 0; i < block.rows(); ++i) p.signal[i] += cj * bj[i];
    }
    p.residual_at_w = residual_at_nodes(p.signal, train);
    return p;
}

} // namespace

BlockVector kernel_block_for_method(const SparseSymMatrix& l, const KernelFunction& phi,
                                    double lambda_max, const std::vector<std::size_t>& w,
                                    Method kr, std::size_t m, OpCounters& counters,
                                    const LanczosOptions& options) {
    const BlockVector ew = unit_block(w, l.dimension());
    switch (kr) {
        case Method::cbl:
            return cbl_approximate(classical_block_lanczos(l, ew, m, counters, options), phi,
                                   lambda_max, counters);
        case Method::gbl:
            return gbl_approximate(global_block_lanczos(l, ew, m, counters), phi, lambda_max,
                                   counters);
        case Method::sbl:
            return sequential_lanczos_approximate(l, ew, m, phi, lambda_max, counters, options);
        case Method::cheb:
            return cheb_apply(l, ew, cheb_coefficients(phi, lambda_max, m), counters);
        case Method::cheb2:
            return cheb_squared_apply(l, ew, phi, lambda_max, m, counters);
        default:
            throw Error("kernel_block_for_method: exact is not an iterative method");
    }
}

std::vector<double> rls_coefficients(const DenseMatrix& collocation, double gamma,
                                     const std::vector<double>& y) {
    const std::size_t N = y.size();
    if (collocation.rows() != N || collocation.cols() != N)
        throw DimensionMismatch("rls_coefficients: collocation shape and labels differ");
    DenseMatrix a = collocation;
    for (std::size_t i = 0; i < N; ++i) a(i, i) += gamma * static_cast<double>(N);
    DenseMatrix rhs(N, 1);
    for (std::size_t i = 0; i < N; ++i) rhs(i, 0) = y[i];
    DenseMatrix x;
    try {
        x = solve_linear(a, rhs);
    } catch (const Singular&) {
        throw NonInvertibleCollocation(
            "rls_coefficients: regularized collocation matrix is singular");
    }
    std::vector<double> c(N);
    for (std::size_t i = 0; i < N; ++i) c[i] = x(i, 0);
    return c;
}

Predictor predict_exact(const SparseSymMatrix& l, const KernelFunction& phi,
                        double lambda_max, const TrainingSet& train) {
    validate_training_set(train, l.dimension());
    const DenseSpectralOracle oracle(l);
    const BlockVector block = oracle.kernel_block(phi, lambda_max, train.nodes);
    const DenseMatrix k = oracle.collocation(phi, lambda_max, train.nodes);
    std::vector<double> c = rls_coefficients(k, train.gamma, train.labels);
    return assemble(Method::exact, 0, train, block, std::move(c));
}

Predictor predict_krylov(const SparseSymMatrix& l, const KernelFunction& phi,
                         double lambda_max, const TrainingSet& train, Method kr,
                         std::size_t m, OpCounters& counters, const LanczosOptions& options) {
    validate_training_set(train, l.dimension());
    if (kr == Method::exact) return predict_exact(l, phi, lambda_max, train);
    if (m == 0) throw Error("predict_krylov: m must be >= 1");

    const BlockVector block =
        kernel_block_for_method(l, phi, lambda_max, train.nodes, kr, m, counters, options);
    const std::size_t N = train.nodes.size();
    DenseMatrix k(N, N);
    for (std::size_t j = 0; j < N; ++j)
        for (std::size_t i = 0; i < N; ++i) k(i, j) = block(train.nodes[i], j);
    std::vector<double> c = rls_coefficients(k, train.gamma, train.labels);
    return assemble(kr, m, train, block, std::move(c));
}

Predictor predict_cbl_hm_only(const SparseSymMatrix& l, const KernelFunction& phi,
                              double lambda_max, const TrainingSet& train, std::size_t m,
                              OpCounters& counters, const LanczosOptions& options) {
    validate_training_set(train, l.dimension());
    if (m == 0) throw Error("predict_cbl_hm_only: m must be >= 1");
    if (!phi.declared_positive())
        throw DomainError("predict_cbl_hm_only: phi must be declared positive");

    const BlockVector ew = unit_block(train.nodes, l.dimension());
    const ClassicalFactorization fact = classical_block_lanczos(l, ew, m, counters, options);

    const std::size_t N = fact.block_size;
    const std::size_t dim = fact.effective_m * N;
    const DenseMatrix phi_h = matrix_function(fact.h, phi, lambda_max);
    counters.small_eig_count += 1;
    counters.small_eig_max_dim = std::max<std::uint64_t>(counters.small_eig_max_dim, dim);

    DenseMatrix k(N, N);  // F_1^T phi(H_m) F_1
    for (std::size_t j = 0; j < N; ++j)
        for (std::size_t i = 0; i < N; ++i) k(i, j) = phi_h(i, j);
    std::vector<double> c = rls_coefficients(k, train.gamma, train.labels);

    // signal = [Q] (phi(H_m) F_1 c), assembled block by block
    DenseMatrix u(dim, 1);
    for (std::size_t r = 0; r < dim; ++r) {
        double s = 0.0;
        for (std::size_t j = 0; j < N; ++j) s += phi_h(r, j) * c[j];
        u(r, 0) = s;
    }
    Predictor p;
    p.method = Method::cbl;
    p.m = m;
    p.gamma = train.gamma;
    p.coefficients = std::move(c);
    p.signal.assign(l.dimension(), 0.0);
    for (std::size_t k2 = 0; k2 < fact.effective_m; ++k2) {
        const BlockVector& q = fact.basis[k2];
        for (std::size_t j = 0; j < N; ++j) {
            const double f = u(k2 * N + j, 0);
            const double* qj = q.col(j);
            for (std::size_t i = 0; i < q.rows(); ++i) p.signal[i] += f * qj[i];
        }
    }
    counters.axpy_count += fact.effective_m * N;
    p.residual_at_w = residual_at_nodes(p.signal, train);
    return p;
}

std::vector<int> classify_sign(const Predictor& p) {
    std::vector<int> out(p.signal.size());
    for (std::size_t i = 0; i < p.signal.size(); ++i) out[i] = p.signal[i] < 0.0 ? -1 : 1;
    return out;
}

} // namespace graphkrylov
