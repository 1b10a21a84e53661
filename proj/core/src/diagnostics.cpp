#include "graphkrylov/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "graphkrylov/errors.hpp"
#include "graphkrylov/graph.hpp"
#include "graphkrylov/spectral_oracle.hpp"

#if defined(GRAPHKRYLOV_HAVE_QUADMATH)
#include <quadmath.h>
#endif

namespace graphkrylov {

namespace {

template <class Real>
struct RealOps;

template <>
struct RealOps<double> {
    static double cos(double x) { return std::cos(x); }
    static double abs(double x) { return std::abs(x); }
    static double exp(double x) { return std::exp(x); }
    static double pow(double x, double y) { return std::pow(x, y); }
    static double pi() { return 3.14159265358979323846; }
};

template <>
struct RealOps<long double> {
    static long double cos(long double x) { return std::cos(x); }
    static long double abs(long double x) { return std::abs(x); }
    static long double exp(long double x) { return std::exp(x); }
    static long double pow(long double x, long double y) { return std::pow(x, y); }
    static long double pi() { return 3.141592653589793238462643383279502884L; }
};

#if defined(GRAPHKRYLOV_HAVE_QUADMATH)
template <>
struct RealOps<__float128> {
    static __float128 cos(__float128 x) { return cosq(x); }
    static __float128 abs(__float128 x) { return fabsq(x); }
    static __float128 exp(__float128 x) { return expq(x); }
    static __float128 pow(__float128 x, __float128 y) { return powq(x, y); }
    static __float128 pi() { return 4 * atanq(__float128(1)); }
};
using BigReal = __float128;
#else
using BigReal = long double;
#endif

/// Uniform error of the degree-m Lobatto interpolant of phi on [0, Lambda],
/// evaluated on a 64(m+1)-point Chebyshev-distributed grid.
template <class Real, class Phi>
double interpolant_uniform_error(Phi&& phi, double lambda_max, std::size_t m) {
    using Ops = RealOps<Real>;
    const Real lam = static_cast<Real>(lambda_max);
    const Real pi = Ops::pi();
    const Real half = Real(1) / Real(2);

    if (m == 0) {
        // degree 0: the constant phi(0)
        const Real p = phi(Real(0));
        Real worst = 0;
        const std::size_t grid = 64;
        for (std::size_t g = 0; g <= grid; ++g) {
            const Real x = half * lam * (Real(1) - Ops::cos(pi * Real(g) / Real(grid)));
            const Real d = Ops::abs(phi(x) - p);
            if (d > worst) worst = d;
        }
        return static_cast<double>(worst);
    }

    std::vector<Real> f(m + 1);
    bool constant = true;
    for (std::size_t j = 0; j <= m; ++j) {
        const Real x = half * lam * (Real(1) - Ops::cos(pi * Real(j) / Real(m)));
        f[j] = phi(x);
        constant = constant && f[j] == f[0];
    }
    if (constant) {
        // the interpolant of a constant is that constant
        const std::size_t grid = 64;
        Real worst = 0;
        for (std::size_t g = 0; g <= grid; ++g) {
            const Real x = half * lam * (Real(1) - Ops::cos(pi * Real(g) / Real(grid)));
            const Real d = Ops::abs(phi(x) - f[0]);
            if (d > worst) worst = d;
        }
        return static_cast<double>(worst);
    }
    std::vector<Real> c(m + 1, Real(0));
    for (std::size_t k = 0; k <= m; ++k) {
        Real s = 0;
        for (std::size_t j = 0; j <= m; ++j) {
            const Real w = (j == 0 || j == m) ? half : Real(1);
            s += w * f[j] * Ops::cos(pi * Real(j * k) / Real(m));
        }
        c[k] = Real(2) * s / Real(m);
    }
    c[0] *= half;
    c[m] *= half;

    const std::size_t grid = 64 * (m + 1);
    Real worst = 0;
    for (std::size_t g = 0; g <= grid; ++g) {
        const Real theta = pi * Real(g) / Real(grid);
        const Real u = Ops::cos(theta);
        const Real x = half * lam * (Real(1) - u);
        // Clenshaw
        Real b1 = 0, b2 = 0;
        for (std::size_t k = m + 1; k-- > 1;) {
            const Real b0 = c[k] + Real(2) * u * b1 - b2;
            b2 = b1;
            b1 = b0;
        }
        const Real p = c[0] + u * b1 - b2;
        const Real d = Ops::abs(phi(x) - p);
        if (d > worst) worst = d;
    }
    return static_cast<double>(worst);
}

} // namespace

double best_approx_estimate(const KernelFunction& phi, double lambda_max, std::size_t m) {
    if (!(lambda_max > 0.0)) throw Error("best_approx_estimate: lambda_max must be positive");
    switch (phi.kind()) {
        case KernelFunction::Kind::diffusion: {
            const BigReal t = static_cast<BigReal>(phi.t());
            return interpolant_uniform_error<BigReal>(
                [t](BigReal x) { return RealOps<BigReal>::exp(-t * x); }, lambda_max, m);
        }
        case KernelFunction::Kind::variational_spline: {
            const BigReal eps = static_cast<BigReal>(phi.eps());
            const BigReal s = static_cast<BigReal>(phi.s());
            return interpolant_uniform_error<BigReal>(
                [eps, s](BigReal x) { return RealOps<BigReal>::pow(eps + x, -s); }, lambda_max,
                m);
        }
        case KernelFunction::Kind::custom:
            return interpolant_uniform_error<double>(
                [&phi](double x) { return phi.value(x); }, lambda_max, m);
    }
    return 0.0;  // unreachable
}

double stewart_leyk_bound(double t, double lambda_max, std::size_t m) {
    if (!(t > 0.0) || !(lambda_max > 0.0))
        throw Error("stewart_leyk_bound: need t > 0 and lambda_max > 0");
    const double b = (std::sqrt(5.0) - 1.0) / 2.0;
    const double d = (std::sqrt(5.0) - 2.0) * std::exp(b);
    const double tl = t * lambda_max;
    const double md = static_cast<double>(m);
    if (md <= tl) {
        const double head =
            2.0 * std::exp(-b * (md + 1.0) * (md + 1.0) / tl) * (1.0 + std::sqrt(tl * RealOps<double>::pi() / (4.0 * b)));
        const double tail = 2.0 * std::pow(d, tl) / (1.0 - d);
        return head + tail;
    }
    return 2.0 * std::pow(d, md) / (1.0 - d);
}

double lanczos_error_bound(std::size_t block_size, double e_hat) {
    return 2.0 * std::sqrt(static_cast<double>(block_size)) * e_hat;
}

double cheb_error_bound(std::size_t block_size, std::size_t m, double e_hat) {
    const double lebesgue = 2.0 + (2.0 / RealOps<double>::pi()) * std::log(static_cast<double>(m) + 1.0);
    return std::sqrt(static_cast<double>(block_size)) * lebesgue * e_hat;
}

namespace {

double method_bound(Method kr, std::size_t block_size, std::size_t m,
                    const KernelFunction& phi, double lambda_max,
                    std::map<std::size_t, double>& ehat_cache) {
    auto ehat = [&](std::size_t degree) {
        auto it = ehat_cache.find(degree);
        if (it == ehat_cache.end())
            it = ehat_cache.emplace(degree, best_approx_estimate(phi, lambda_max, degree)).first;
        return it->second;
    };
    switch (kr) {
        case Method::cbl:
        case Method::gbl:
        case Method::sbl:
            // m blocks carry a degree-(m-1) approximant
            return lanczos_error_bound(block_size, ehat(m - 1));
        case Method::cheb:
            return cheb_error_bound(block_size, m, ehat(m));
        case Method::cheb2: {
            const std::size_t mh = m / 2;
            KernelFunction root = KernelFunction::custom(
                "sqrt_" + phi.name(),
                [&phi](double x) { return std::sqrt(std::max(phi.value(x), 0.0)); }, true);
            const double e_root = best_approx_estimate(root, lambda_max, mh);
            const double lebesgue =
                2.0 + (2.0 / RealOps<double>::pi()) * std::log(static_cast<double>(mh) + 1.0);
            const double sup_err = lebesgue * e_root;  // >= |sqrt(phi) - q|_inf
            const double root_max = std::sqrt(std::max(phi_range(phi, lambda_max).max, 0.0));
            return std::sqrt(static_cast<double>(block_size)) * sup_err *
                   (2.0 * root_max + sup_err);
        }
        default:
            return 0.0;
    }
}

} // namespace

std::vector<ConvergenceRecord> convergence_study(
    const SparseSymMatrix& l, const KernelFunction& phi, double lambda_max,
    const std::vector<std::size_t>& w, const std::vector<std::size_t>& m_values,
    const std::vector<Method>& methods, const TrainingSet* train,
    const LanczosOptions& options) {
    const DenseSpectralOracle oracle(l);
    const BlockVector exact_block = oracle.kernel_block(phi, lambda_max, w);
    const std::size_t n = l.dimension();
    const std::size_t N = w.size();

    std::vector<double> exact_signal;
    if (train) {
        if (train->nodes != w)
            throw Error("convergence_study: training nodes must match the sampling set W");
        const DenseMatrix k_exact = oracle.collocation(phi, lambda_max, w);
        const std::vector<double> c = rls_coefficients(k_exact, train->gamma, train->labels);
        exact_signal.assign(n, 0.0);
        for (std::size_t j = 0; j < N; ++j)
            for (std::size_t i = 0; i < n; ++i) exact_signal[i] += c[j] * exact_block(i, j);
    }

    std::map<std::size_t, double> ehat_cache;
    std::vector<ConvergenceRecord> records;
    for (Method kr : methods) {
        for (std::size_t m : m_values) {
            ConvergenceRecord rec;
            rec.method = kr;
            rec.m = m;
            BlockVector block =
                kernel_block_for_method(l, phi, lambda_max, w, kr, m, rec.counters, options);

            double fro = 0.0, uni = 0.0;
            for (std::size_t j = 0; j < N; ++j)
                for (std::size_t i = 0; i < n; ++i) {
                    const double d = block(i, j) - exact_block(i, j);
                    fro += d * d;
                    uni = std::max(uni, std::abs(d));
                }
            rec.error_fro = std::sqrt(fro);
            rec.error_uniform = uni;
            rec.bound_value = method_bound(kr, N, m, phi, lambda_max, ehat_cache);

            rec.predictor_error_uniform = std::numeric_limits<double>::quiet_NaN();
            if (train) {
                DenseMatrix k(N, N);
                for (std::size_t j = 0; j < N; ++j)
                    for (std::size_t i = 0; i < N; ++i) k(i, j) = block(w[i], j);
                try {
                    const std::vector<double> c =
                        rls_coefficients(k, train->gamma, train->labels);
                    double worst = 0.0;
                    for (std::size_t i = 0; i < n; ++i) {
                        double s = 0.0;
                        for (std::size_t j = 0; j < N; ++j) s += c[j] * block(i, j);
                        worst = std::max(worst, std::abs(s - exact_signal[i]));
                    }
                    rec.predictor_error_uniform = worst;
                } catch (const NonInvertibleCollocation&) {
                    rec.predictor_ok = false;
                }
            }
            records.push_back(std::move(rec));
        }
    }
    return records;
}

std::vector<SpectrumRecord> collocation_spectrum_study(
    const SparseSymMatrix& l, const KernelFunction& phi, double lambda_max,
    const std::vector<std::size_t>& w, std::size_t m, const std::vector<Method>& methods,
    const LanczosOptions& options) {
    const std::size_t N = w.size();
    if (N > 128) throw SizeExceeded("collocation_spectrum_study: N > 128");

    std::vector<SpectrumRecord> records;
    for (Method kr : methods) {
        OpCounters counters;
        SpectrumRecord rec;
        rec.method = kr;
        rec.m = m;
        const BlockVector block =
            kernel_block_for_method(l, phi, lambda_max, w, kr, m, counters, options);
        DenseMatrix k(N, N);
        for (std::size_t j = 0; j < N; ++j)
            for (std::size_t i = 0; i < N; ++i) k(i, j) = block(w[i], j);

        double defect = 0.0;
        for (std::size_t j = 0; j < N; ++j)
            for (std::size_t i = 0; i < j; ++i) {
                const double d = k(i, j) - k(j, i);
                defect += d * d;
            }
        rec.symmetry_defect = std::sqrt(2.0 * defect);

        if (rec.symmetry_defect <= 1e-12 * std::max(k.frobenius_norm(), 1e-300)) {
            for (std::size_t j = 0; j < N; ++j)
                for (std::size_t i = 0; i < j; ++i) {
                    const double v = 0.5 * (k(i, j) + k(j, i));
                    k(i, j) = k(j, i) = v;
                }
            const SymEigDecomposition eig = sym_eig(k);
            for (double lam : eig.eigenvalues) rec.eigenvalues.emplace_back(lam, 0.0);
        } else {
            rec.eigenvalues = general_eigenvalues(k);
        }
        records.push_back(std::move(rec));
    }
    return records;
}

} // namespace graphkrylov
