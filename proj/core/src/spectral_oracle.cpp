#include "graphkrylov/spectral_oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "graphkrylov/errors.hpp"

namespace graphkrylov {

std::size_t oracle_cap() {
    if (const char* env = std::getenv("GRAPHKRYLOV_ORACLE_CAP")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v > 0) return static_cast<std::size_t>(v);
    }
    return 2000;
}

DenseSpectralOracle::DenseSpectralOracle(const SparseSymMatrix& l) : n_(l.dimension()) {
    if (n_ > oracle_cap())
        throw SizeExceeded("DenseSpectralOracle: graph exceeds the dense oracle cap (" +
                           std::to_string(oracle_cap()) + " nodes)");
    eig_ = sym_eig(l.to_dense());
}

std::vector<double> DenseSpectralOracle::phi_values(const KernelFunction& phi,
                                                    double lambda_max) const {
    const double slack = kTolSpec * std::max(1.0, lambda_max);
    std::vector<double> fv(n_);
    for (std::size_t i = 0; i < n_; ++i) {
        const double lam = eig_.eigenvalues[i];
        if (lam < -slack || lam > lambda_max + slack)
            throw DomainError("oracle: eigenvalue of L outside [0, lambda_max]");
        fv[i] = phi.value(std::clamp(lam, 0.0, lambda_max));
    }
    return fv;
}

BlockVector DenseSpectralOracle::kernel_block(const KernelFunction& phi, double lambda_max,
                                              const std::vector<std::size_t>& w) const {
    const std::vector<double> fv = phi_values(phi, lambda_max);
    for (std::size_t node : w)
        if (node >= n_) throw IndexOutOfRange("oracle: sampling node out of range");

    // phi(L) E_W = V diag(fv) (V^T E_W); V^T E_W reads rows of V
    const DenseMatrix& v = eig_.eigenvectors;
    const std::size_t N = w.size();
    BlockVector out(n_, N);
    for (std::size_t j = 0; j < N; ++j) {
        double* oj = out.col(j);
        const std::size_t node = w[j];
        for (std::size_t k = 0; k < n_; ++k) {
            const double c = fv[k] * v(node, k);
            if (c == 0.0) continue;
            const double* vk = v.col(k);
            for (std::size_t i = 0; i < n_; ++i) oj[i] += c * vk[i];
        }
    }
    return out;
}

DenseMatrix DenseSpectralOracle::collocation(const KernelFunction& phi, double lambda_max,
                                             const std::vector<std::size_t>& w) const {
    const BlockVector block = kernel_block(phi, lambda_max, w);
    const std::size_t N = w.size();
    DenseMatrix k(N, N);
    for (std::size_t j = 0; j < N; ++j)
        for (std::size_t i = 0; i < N; ++i) k(i, j) = block(w[i], j);
    // exact phi(L) is symmetric; average out the functional-calculus roundoff
    for (std::size_t j = 0; j < N; ++j)
        for (std::size_t i = 0; i < j; ++i) {
            const double m = 0.5 * (k(i, j) + k(j, i));
            k(i, j) = k(j, i) = m;
        }
    return k;
}

BlockVector exact_kernel_block(const SparseSymMatrix& l, const KernelFunction& phi,
                               double lambda_max, const std::vector<std::size_t>& w) {
    return DenseSpectralOracle(l).kernel_block(phi, lambda_max, w);
}

DenseMatrix exact_collocation(const SparseSymMatrix& l, const KernelFunction& phi,
                              double lambda_max, const std::vector<std::size_t>& w) {
    return DenseSpectralOracle(l).collocation(phi, lambda_max, w);
}

} // namespace graphkrylov
