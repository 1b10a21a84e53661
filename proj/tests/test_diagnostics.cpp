#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "graphkrylov/diagnostics.hpp"
#include "graphkrylov/graph.hpp"
#include "graphkrylov/rng.hpp"
#include "graphkrylov/spectral_oracle.hpp"

using namespace graphkrylov;

TEST_CASE("best_approx_estimate reproduces polynomials and constants") {
    const auto c = KernelFunction::custom("const", [](double) { return 3.5; }, true);
    CHECK(best_approx_estimate(c, 2.0, 0) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(best_approx_estimate(c, 2.0, 7) == doctest::Approx(0.0).epsilon(1e-15));

    const auto cubic = KernelFunction::custom(
        "cubic", [](double x) { return 1.0 + x * (0.5 + x * (-2.0 + 0.25 * x)); }, false);
    CHECK(best_approx_estimate(cubic, 2.0, 3) <= 1e-13);
    CHECK(best_approx_estimate(cubic, 2.0, 8) <= 1e-13);
    // degree 2 cannot reproduce a cubic
    CHECK(best_approx_estimate(cubic, 2.0, 2) > 1e-4);
}

TEST_CASE("best_approx_estimate decreases with the degree") {
    const auto phi = KernelFunction::diffusion(5.0);
    double prev = 1e300;
    for (std::size_t m : {1u, 4u, 8u, 16u, 32u}) {
        const double e = best_approx_estimate(phi, 2.0, m);
        CHECK(e <= prev * 1.01);
        prev = e;
    }
    CHECK(prev < 1e-10);
}

TEST_CASE("stewart_leyk_bound constants and shape") {
    // b = (sqrt(5)-1)/2, d = (sqrt(5)-2) e^b
    const double b = (std::sqrt(5.0) - 1.0) / 2.0;
    const double d = (std::sqrt(5.0) - 2.0) * std::exp(b);
    CHECK(b == doctest::Approx(0.6180339887).epsilon(1e-9));
    CHECK(d == doctest::Approx(0.4380).epsilon(1e-3 / 0.438));

    // geometric decay beyond the crossover, monotone to zero
    double prev = 1e300;
    for (std::size_t m = 41; m <= 80; ++m) {
        const double v = stewart_leyk_bound(20.0, 2.0, m);
        CHECK(v > 0.0);
        CHECK(v < prev);
        prev = v;
    }
    // ratio of consecutive m>tL values is exactly d
    const double r = stewart_leyk_bound(20.0, 2.0, 51) / stewart_leyk_bound(20.0, 2.0, 50);
    CHECK(r == doctest::Approx(d).epsilon(1e-12));

    // both branches finite and positive at the crossover
    CHECK(std::isfinite(stewart_leyk_bound(20.0, 2.0, 40)));
    CHECK(std::isfinite(stewart_leyk_bound(20.0, 2.0, 41)));
}

TEST_CASE("estimate sits below the Stewart-Leyk bound for the diffusion kernel") {
    const auto phi = KernelFunction::diffusion(20.0);
    for (std::size_t m = 41; m <= 60; ++m) {
        const double est = best_approx_estimate(phi, 2.0, m);
        const double bound = stewart_leyk_bound(20.0, 2.0, m);
        CAPTURE(m);
        CHECK(est < bound);
    }
}

TEST_CASE("bound formula evaluators") {
    CHECK(lanczos_error_bound(1, 0.5) == doctest::Approx(1.0));
    CHECK(lanczos_error_bound(4, 0.0) == doctest::Approx(0.0));
    CHECK(cheb_error_bound(4, 0, 0.25) == doctest::Approx(2.0 * 0.25 * 2.0));  // log 1 = 0
    CHECK(cheb_error_bound(1, 1, 1.0) ==
          doctest::Approx(2.0 + 2.0 / 3.14159265358979323846 * std::log(2.0)));
}

TEST_CASE("convergence_study records, counters and the error bound") {
    const auto pts = synthetic_point_cloud(150, 4);
    const Graph g = proximity_graph(pts, 0.12);
    const SparseSymMatrix l = build_laplacian(g, LaplacianKind::normalized);
    const auto w = sample_nodes(g, 5, 3, 0.18);
    const auto phi = KernelFunction::diffusion(4.0);
    const std::vector<Method> methods{Method::cbl, Method::gbl, Method::sbl, Method::cheb,
                                      Method::cheb2};
    const std::vector<std::size_t> ms{2, 4, 6, 8, 10};

    const auto records = convergence_study(l, phi, 2.0, w, ms, methods);
    REQUIRE(records.size() == methods.size() * ms.size());

    for (const auto& rec : records) {
        CAPTURE(method_name(rec.method));
        CAPTURE(rec.m);
        CHECK(rec.error_fro >= 0.0);
        CHECK(rec.error_uniform <= rec.error_fro + 1e-15);
        // MV identity
        const std::uint64_t expected_mv = rec.method == Method::cheb2
                                              ? 2 * (rec.m / 2) * w.size()
                                              : rec.m * w.size();
        CHECK(rec.counters.mv_count == expected_mv);
        // bound at 1.1 slack (cheb2 carries its own derived bound)
        CHECK(rec.error_fro <= rec.bound_value * 1.1);
        CHECK(std::isnan(rec.predictor_error_uniform));
    }

    // errors eventually reach the oracle
    const auto at = [&](Method kr, std::size_t m) {
        for (const auto& r : records)
            if (r.method == kr && r.m == m) return r.error_fro;
        return -1.0;
    };
    CHECK(at(Method::cbl, 10) < at(Method::cbl, 2));
}

TEST_CASE("convergence_study with predictors records singular outcomes") {
    const auto pts = synthetic_point_cloud(150, 4);
    const Graph g = proximity_graph(pts, 0.12);
    const SparseSymMatrix l = build_laplacian(g, LaplacianKind::normalized);
    const auto w = sample_nodes(g, 5, 3, 0.18);
    TrainingSet train;
    train.nodes = w;
    SplitMix64 rng(6);
    for (std::size_t i = 0; i < w.size(); ++i)
        train.labels.push_back(rng.next_u64() & 1 ? 1.0 : 0.0);

    const auto phi = KernelFunction::diffusion(4.0);
    const auto records = convergence_study(l, phi, 2.0, w, {2, 6, 12, 20},
                                           {Method::cbl, Method::cheb}, &train);
    for (const auto& rec : records) {
        if (rec.predictor_ok) CHECK(std::isfinite(rec.predictor_error_uniform));
        if (rec.method == Method::cbl) CHECK(rec.predictor_ok);  // SPD system
    }
    // by m=20 the cbl predictor has converged
    for (const auto& rec : records)
        if (rec.method == Method::cbl && rec.m == 20)
            CHECK(rec.predictor_error_uniform <= 1e-8);
}

TEST_CASE("predictor error bound trend at the top of the sweep") {
    // |y - y_kr|_2 <= C * block error, C the perturbation constant,
    // checked on the top half of the sweep only
    const auto pts = synthetic_point_cloud(150, 4);
    const Graph g = proximity_graph(pts, 0.12);
    const SparseSymMatrix l = build_laplacian(g, LaplacianKind::normalized);
    const auto w = sample_nodes(g, 5, 9, 0.18);
    TrainingSet train;
    train.nodes = w;
    SplitMix64 rng(8);
    double ynorm = 0.0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        train.labels.push_back(rng.next_u64() & 1 ? 1.0 : 0.0);
        ynorm += train.labels.back() * train.labels.back();
    }
    ynorm = std::sqrt(ynorm);

    const auto phi = KernelFunction::variational_spline(0.5, 1.0);
    const auto range = phi_range(phi, 2.0);
    const double denom = range.min + train.gamma * static_cast<double>(w.size());
    const double constant = (ynorm / denom) * (1.0 + range.max / denom) * 1.1;

    std::vector<std::size_t> ms;
    for (std::size_t m = 2; m <= 16; ++m) ms.push_back(m);
    const auto records =
        convergence_study(l, phi, 2.0, w, ms, {Method::cbl, Method::gbl, Method::sbl}, &train);
    const DenseSpectralOracle oracle(l);
    for (const auto& rec : records) {
        if (rec.m < 9 || !rec.predictor_ok) continue;  // asymptotic statement
        // crude l2 from uniform: |v|_2 <= sqrt(n) |v|_inf; block error_fro >= |.|_2
        const double lhs = rec.predictor_error_uniform * 1.0;  // |.|_inf <= |.|_2
        CHECK(lhs <= constant * rec.error_fro + 1e-9);
    }
}

TEST_CASE("collocation_spectrum_study on a small graph") {
    const auto pts = synthetic_point_cloud(150, 4);
    const Graph g = proximity_graph(pts, 0.12);
    const SparseSymMatrix l = build_laplacian(g, LaplacianKind::normalized);
    const auto w = sample_nodes(g, 8, 21, 0.15);
    const auto phi = KernelFunction::diffusion(8.0);
    const std::vector<Method> methods{Method::cbl, Method::gbl, Method::sbl, Method::cheb,
                                      Method::cheb2};
    const auto records = collocation_spectrum_study(l, phi, 2.0, w, 4, methods);
    REQUIRE(records.size() == 5);
    for (const auto& rec : records) {
        CAPTURE(method_name(rec.method));
        REQUIRE(rec.eigenvalues.size() == 8);
        if (rec.method != Method::sbl) {
            // symmetric by construction (gbl: proposition in the text)
            CHECK(rec.symmetry_defect <= 1e-10);
            for (const auto& z : rec.eigenvalues) CHECK(z.imag() == 0.0);
        }
        if (rec.method == Method::cbl)
            for (const auto& z : rec.eigenvalues) CHECK(z.real() > 0.0);
        if (rec.method == Method::cheb2)
            for (const auto& z : rec.eigenvalues) CHECK(z.real() >= -1e-12);
    }
}
