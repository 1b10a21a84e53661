#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>

#include "graphkrylov/dense_matrix.hpp"
#include "graphkrylov/errors.hpp"
#include "graphkrylov/kernel_function.hpp"
#include "graphkrylov/rng.hpp"

using namespace graphkrylov;

namespace {

DenseMatrix random_matrix(std::size_t rows, std::size_t cols, SplitMix64& rng) {
    DenseMatrix m(rows, cols);
    for (std::size_t j = 0; j < cols; ++j)
        for (std::size_t i = 0; i < rows; ++i) m(i, j) = 2.0 * rng.next_double() - 1.0;
    return m;
}

DenseMatrix random_symmetric(std::size_t n, SplitMix64& rng) {
    DenseMatrix m(n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i <= j; ++i) {
            const double v = 2.0 * rng.next_double() - 1.0;
            m(i, j) = m(j, i) = v;
        }
    return m;
}

double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b) {
    double worst = 0.0;
    for (std::size_t j = 0; j < a.cols(); ++j)
        for (std::size_t i = 0; i < a.rows(); ++i)
            worst = std::max(worst, std::abs(a(i, j) - b(i, j)));
    return worst;
}

} // namespace

TEST_CASE("reduced_qr identity input") {
    const auto qr = reduced_qr(DenseMatrix::identity(2));
    CHECK(max_abs_diff(qr.q, DenseMatrix::identity(2)) < 1e-15);
    CHECK(max_abs_diff(qr.r, DenseMatrix::identity(2)) < 1e-15);
    CHECK_FALSE(qr.deficient);
}

TEST_CASE("reduced_qr zero block is rank deficient") {
    const auto qr = reduced_qr(DenseMatrix(3, 1));
    CHECK(qr.deficient);
}

TEST_CASE("reduced_qr round trip and orthogonality") {
    SplitMix64 rng(101);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 2 + rng.next_index(49);
        const std::size_t N = 1 + rng.next_index(std::min<std::size_t>(n, 8));
        const DenseMatrix x = random_matrix(n, N, rng);
        const auto qr = reduced_qr(x);
        CHECK(max_abs_diff(qr.q * qr.r, x) <= 1e-12 * (x.frobenius_norm() + 1.0));
        CHECK(max_abs_diff(matmul_tn(qr.q, qr.q), DenseMatrix::identity(N)) <= 1e-12);
        for (std::size_t j = 0; j < N; ++j) CHECK(qr.r(j, j) >= 0.0);
        for (std::size_t j = 0; j < N; ++j)
            for (std::size_t i = j + 1; i < N; ++i) CHECK(qr.r(i, j) == 0.0);
    }
}

TEST_CASE("sym_eig diagonal and identity") {
    DenseMatrix d(3, 3);
    d(0, 0) = 3.0;
    d(1, 1) = 1.0;
    d(2, 2) = 2.0;
    const auto eig = sym_eig(d);
    CHECK(eig.eigenvalues[0] == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(eig.eigenvalues[1] == doctest::Approx(2.0).epsilon(1e-13));
    CHECK(eig.eigenvalues[2] == doctest::Approx(3.0).epsilon(1e-13));

    const auto eye = sym_eig(DenseMatrix::identity(5));
    for (double lam : eye.eigenvalues) CHECK(lam == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("sym_eig 2x2 hand computed") {
    // [[1,-1],[-1,1]] has eigenvalues 0 and 2
    DenseMatrix s(2, 2);
    s(0, 0) = s(1, 1) = 1.0;
    s(0, 1) = s(1, 0) = -1.0;
    const auto eig = sym_eig(s);
    CHECK(eig.eigenvalues[0] == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(eig.eigenvalues[1] == doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("sym_eig rejects nonsymmetric input") {
    DenseMatrix s(2, 2);
    s(0, 1) = 1.0;
    CHECK_THROWS_AS(sym_eig(s), NotSymmetric);
}

TEST_CASE("sym_eig reconstruction up to d=200") {
    SplitMix64 rng(7);
    for (std::size_t d : {5, 40, 200}) {
        const DenseMatrix s = random_symmetric(d, rng);
        const auto eig = sym_eig(s);
        // V Lambda V^T == S
        DenseMatrix vl(d, d);
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t i = 0; i < d; ++i)
                vl(i, j) = eig.eigenvectors(i, j) * eig.eigenvalues[j];
        const DenseMatrix recon = vl * eig.eigenvectors.transposed();
        double worst = max_abs_diff(recon, s);
        CHECK(worst <= 1e-11 * s.frobenius_norm());
        CHECK(max_abs_diff(matmul_tn(eig.eigenvectors, eig.eigenvectors),
                           DenseMatrix::identity(d)) <= 1e-12);
        CHECK(std::is_sorted(eig.eigenvalues.begin(), eig.eigenvalues.end()));
    }
}

TEST_CASE("matrix_function t=0 diffusion is the identity") {
    SplitMix64 rng(5);
    DenseMatrix s = random_symmetric(4, rng);
    // shift to make it PSD-ish inside [0, 20]
    for (std::size_t i = 0; i < 4; ++i) s(i, i) += 5.0;
    const DenseMatrix f = matrix_function(s, KernelFunction::diffusion(0.0), 20.0);
    CHECK(max_abs_diff(f, DenseMatrix::identity(4)) < 1e-12);
}

TEST_CASE("matrix_function 2x2 diffusion hand computed") {
    // S = [[1,-1],[-1,1]], phi = exp(-lambda):
    // (1/2) [[1+e^-2, 1-e^-2], [1-e^-2, 1+e^-2]]
    DenseMatrix s(2, 2);
    s(0, 0) = s(1, 1) = 1.0;
    s(0, 1) = s(1, 0) = -1.0;
    const DenseMatrix f = matrix_function(s, KernelFunction::diffusion(1.0), 2.0);
    const double e2 = std::exp(-2.0);
    CHECK(f(0, 0) == doctest::Approx(0.5 * (1 + e2)).epsilon(1e-13));
    CHECK(f(1, 1) == doctest::Approx(0.5 * (1 + e2)).epsilon(1e-13));
    CHECK(f(0, 1) == doctest::Approx(0.5 * (1 - e2)).epsilon(1e-13));
    CHECK(f(1, 0) == doctest::Approx(0.5 * (1 - e2)).epsilon(1e-13));
}

TEST_CASE("matrix_function diagonal spline") {
    DenseMatrix s(2, 2);
    s(1, 1) = 4.0;
    const DenseMatrix f = matrix_function(s, KernelFunction::variational_spline(1.0, 1.0), 4.0);
    CHECK(f(0, 0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(f(1, 1) == doctest::Approx(0.2).epsilon(1e-14));
    CHECK(std::abs(f(0, 1)) < 1e-14);
}

TEST_CASE("matrix_function flags a broken spectral bound") {
    DenseMatrix s(2, 2);
    s(0, 0) = 1.0;
    s(1, 1) = 5.0;
    CHECK_THROWS_AS(matrix_function(s, KernelFunction::diffusion(1.0), 2.0), DomainError);
}

TEST_CASE("matrix_function multiplicativity on a shared matrix") {
    SplitMix64 rng(11);
    DenseMatrix s = random_symmetric(6, rng);
    for (std::size_t i = 0; i < 6; ++i) s(i, i) += 4.0;  // spectrum within [0, 16]
    const auto f1 = KernelFunction::diffusion(0.7);
    const auto f2 = KernelFunction::diffusion(1.3);
    const auto f12 = KernelFunction::diffusion(2.0);
    const DenseMatrix lhs = matrix_function(s, f12, 16.0);
    const DenseMatrix rhs = matrix_function(s, f1, 16.0) * matrix_function(s, f2, 16.0);
    CHECK(max_abs_diff(lhs, rhs) <= 1e-10);
}

TEST_CASE("solve_linear basics") {
    DenseMatrix b(2, 1);
    b(0, 0) = 1.0;
    b(1, 0) = 1.0;
    SUBCASE("identity") {
        const DenseMatrix x = solve_linear(DenseMatrix::identity(2), b);
        CHECK(x(0, 0) == doctest::Approx(1.0));
        CHECK(x(1, 0) == doctest::Approx(1.0));
    }
    SUBCASE("diagonal") {
        DenseMatrix a(2, 2);
        a(0, 0) = 2.0;
        a(1, 1) = 4.0;
        const DenseMatrix x = solve_linear(a, b);
        CHECK(x(0, 0) == doctest::Approx(0.5).epsilon(1e-15));
        CHECK(x(1, 0) == doctest::Approx(0.25).epsilon(1e-15));
    }
    SUBCASE("singular") {
        DenseMatrix a(2, 2);
        a(0, 0) = a(0, 1) = a(1, 0) = a(1, 1) = 1.0;
        CHECK_THROWS_AS(solve_linear(a, b), Singular);
    }
}

TEST_CASE("solve_linear residual on random systems") {
    SplitMix64 rng(23);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = 2 + rng.next_index(30);
        const DenseMatrix a = random_matrix(n, n, rng);
        const DenseMatrix b = random_matrix(n, 2, rng);
        const DenseMatrix x = solve_linear(a, b);
        const DenseMatrix resid = a * x - b;
        CHECK(resid.frobenius_norm() <=
              1e-10 * a.frobenius_norm() * (x.frobenius_norm() + 1.0));
    }
}

TEST_CASE("general_eigenvalues rotation matrix") {
    DenseMatrix a(2, 2);
    a(0, 1) = -1.0;
    a(1, 0) = 1.0;
    const auto eigs = general_eigenvalues(a);
    REQUIRE(eigs.size() == 2);
    CHECK(eigs[0].real() == doctest::Approx(0.0).epsilon(1e-13));
    CHECK(eigs[0].imag() == doctest::Approx(-1.0).epsilon(1e-13));
    CHECK(eigs[1].imag() == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("general_eigenvalues diagonal") {
    DenseMatrix a(3, 3);
    a(0, 0) = 1.0;
    a(1, 1) = 2.0;
    a(2, 2) = 3.0;
    const auto eigs = general_eigenvalues(a);
    REQUIRE(eigs.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(eigs[i].real() == doctest::Approx(static_cast<double>(i + 1)).epsilon(1e-13));
        CHECK(eigs[i].imag() == 0.0);
    }
}

TEST_CASE("general_eigenvalues matches sym_eig on symmetric input") {
    SplitMix64 rng(31);
    for (int trial = 0; trial < 10; ++trial) {
        const std::size_t n = 2 + rng.next_index(20);
        const DenseMatrix s = random_symmetric(n, rng);
        auto general = general_eigenvalues(s);
        const auto sym = sym_eig(s);
        std::sort(general.begin(), general.end(),
                  [](const auto& a, const auto& b) { return a.real() < b.real(); });
        for (std::size_t i = 0; i < n; ++i) {
            CHECK(std::abs(general[i].imag()) <= 1e-9);
            CHECK(general[i].real() == doctest::Approx(sym.eigenvalues[i]).epsilon(1e-9).scale(1.0));
        }
    }
}

TEST_CASE("general_eigenvalues size guard") {
    CHECK_THROWS_AS(general_eigenvalues(DenseMatrix(129, 129)), SizeExceeded);
}

TEST_CASE("general_eigenvalues complex pairs are conjugate") {
    SplitMix64 rng(37);
    for (int trial = 0; trial < 10; ++trial) {
        const std::size_t n = 3 + rng.next_index(12);
        const DenseMatrix a = random_matrix(n, n, rng);
        auto eigs = general_eigenvalues(a);
        double imag_sum = 0.0;
        for (const auto& z : eigs) imag_sum += z.imag();
        CHECK(std::abs(imag_sum) <= 1e-9);  // pairs cancel
        // trace check: sum of eigenvalues equals the trace
        double tr = 0.0;
        for (std::size_t i = 0; i < n; ++i) tr += a(i, i);
        double re_sum = 0.0;
        for (const auto& z : eigs) re_sum += z.real();
        CHECK(re_sum == doctest::Approx(tr).epsilon(1e-8).scale(std::max(1.0, std::abs(tr))));
    }
}
