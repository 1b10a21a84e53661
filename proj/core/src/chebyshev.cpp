#include "graphkrylov/chebyshev.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "graphkrylov/errors.hpp"

namespace graphkrylov {

namespace {

ChebCoefficients coefficients_from_values(const std::vector<double>& f, double lambda_max) {
    // DCT-I with halved endpoints; c_0 and c_m halved once more
    const std::size_t m = f.size() - 1;
    ChebCoefficients out;
    out.degree = m;
    out.lambda_max = lambda_max;
    out.c.assign(m + 1, 0.0);
    if (std::all_of(f.begin(), f.end(), [&](double v) { return v == f[0]; })) {
        out.c[0] = f[0];  // the interpolant of a constant is that constant
        return out;
    }
    for (std::size_t k = 0; k <= m; ++k) {
        double s = 0.0;
        for (std::size_t j = 0; j <= m; ++j) {
            const double w = (j == 0 || j == m) ? 0.5 : 1.0;
            s += w * f[j] * std::cos(std::numbers::pi * static_cast<double>(j * k) /
                                     static_cast<double>(m));
        }
        out.c[k] = 2.0 * s / static_cast<double>(m);
    }
    out.c[0] *= 0.5;
    out.c[m] *= 0.5;
    return out;
}

// S X = X - (2/Lambda) L X, one MV per column
BlockVector apply_shifted(const SparseSymMatrix& l, const BlockVector& x, double lambda_max,
                          OpCounters& counters) {
    BlockVector y = spmv_block(l, x, counters);
    const double f = 2.0 / lambda_max;
    for (std::size_t t = 0; t < x.rows() * x.cols(); ++t)
        y.data()[t] = x.data()[t] - f * y.data()[t];
    counters.axpy_count += x.cols();
    return y;
}

std::size_t effective_degree(const ChebCoefficients& coeffs) {
    std::size_t d = coeffs.degree;
    while (d > 0 && coeffs.c[d] == 0.0) --d;
    return d;
}

} // namespace

ChebCoefficients cheb_coefficients(const KernelFunction& phi, double lambda_max,
                                   std::size_t m) {
    if (m == 0) throw Error("cheb_coefficients: m must be >= 1");
    if (!(lambda_max > 0.0)) throw Error("cheb_coefficients: lambda_max must be positive");
    std::vector<double> f(m + 1);
    for (std::size_t j = 0; j <= m; ++j) {
        const double x =
            0.5 * lambda_max *
            (1.0 - std::cos(std::numbers::pi * static_cast<double>(j) / static_cast<double>(m)));
        f[j] = phi.value(std::clamp(x, 0.0, lambda_max));
    }
    return coefficients_from_values(f, lambda_max);
}

double cheb_eval_scalar(const ChebCoefficients& coeffs, double lambda) {
    const double lam = coeffs.lambda_max;
    const double slack = kTolSpec * std::max(1.0, lam);
    if (lambda < -slack || lambda > lam + slack)
        throw DomainError("cheb_eval_scalar: lambda outside [0, lambda_max]");
    const double x = 1.0 - 2.0 * std::clamp(lambda, 0.0, lam) / lam;

    // Clenshaw recurrence
    double b1 = 0.0, b2 = 0.0;
    for (std::size_t k = coeffs.c.size(); k-- > 1;) {
        const double b0 = coeffs.c[k] + 2.0 * x * b1 - b2;
        b2 = b1;
        b1 = b0;
    }
    return coeffs.c[0] + x * b1 - b2;
}

BlockVector cheb_apply(const SparseSymMatrix& l, const BlockVector& ew,
                       const ChebCoefficients& coeffs, OpCounters& counters) {
    if (l.dimension() != ew.rows())
        throw DimensionMismatch("cheb_apply: operator and block dimensions differ");
    const std::size_t n = ew.rows();
    const std::size_t N = ew.cols();
    const std::size_t deg = effective_degree(coeffs);

    BlockVector acc(n, N);  // sum_k c_k T_k(S) E_W
    for (std::size_t t = 0; t < n * N; ++t) acc.data()[t] = coeffs.c[0] * ew.data()[t];
    if (deg == 0) return acc;

    BlockVector prev = ew;                                            // T_0
    BlockVector cur = apply_shifted(l, ew, coeffs.lambda_max, counters);  // T_1
    for (std::size_t t = 0; t < n * N; ++t) acc.data()[t] += coeffs.c[1] * cur.data()[t];
    counters.axpy_count += N;

    for (std::size_t k = 2; k <= deg; ++k) {
        // T_{k} = 2 S T_{k-1} - T_{k-2}
        BlockVector next = apply_shifted(l, cur, coeffs.lambda_max, counters);
        for (std::size_t t = 0; t < n * N; ++t)
            next.data()[t] = 2.0 * next.data()[t] - prev.data()[t];
        counters.axpy_count += N;
        for (std::size_t t = 0; t < n * N; ++t) acc.data()[t] += coeffs.c[k] * next.data()[t];
        counters.axpy_count += N;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return acc;
}

BlockVector cheb_squared_apply(const SparseSymMatrix& l, const BlockVector& ew,
                               const KernelFunction& phi, double lambda_max,
                               std::size_t m, OpCounters& counters) {
    if (m == 0) throw Error("cheb_squared_apply: m must be >= 1");
    const std::size_t half = m / 2;

    auto sqrt_value_at = [&](double x) {
        const double v = phi.value(std::clamp(x, 0.0, lambda_max));
        if (v < 0.0)
            throw NegativePhiAtNode("cheb_squared_apply: phi negative at a Lobatto node");
        return std::sqrt(v);
    };

    if (half == 0) {
        // degree-0 interpolant of sqrt(phi) at the single node lambda = 0
        const double q0 = sqrt_value_at(0.0);
        BlockVector out(ew.rows(), ew.cols());
        for (std::size_t t = 0; t < ew.rows() * ew.cols(); ++t)
            out.data()[t] = q0 * q0 * ew.data()[t];
        return out;
    }

    std::vector<double> f(half + 1);
    for (std::size_t j = 0; j <= half; ++j) {
        const double x = 0.5 * lambda_max *
                         (1.0 - std::cos(std::numbers::pi * static_cast<double>(j) /
                                         static_cast<double>(half)));
        f[j] = sqrt_value_at(x);
    }
    const ChebCoefficients q = coefficients_from_values(f, lambda_max);
    return cheb_apply(l, cheb_apply(l, ew, q, counters), q, counters);
}

} // namespace graphkrylov
