#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "graphkrylov/errors.hpp"
#include "graphkrylov/graph.hpp"
#include "graphkrylov/rng.hpp"
#include "graphkrylov/spectral_oracle.hpp"

using namespace graphkrylov;

namespace {

Graph random_graph(std::size_t n, double p, SplitMix64& rng) {
    Graph g(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (rng.next_double() < p) g.add_edge(i, j, 1.0);
    return g;
}

} // namespace

TEST_CASE("path_graph shapes") {
    CHECK(path_graph(201).edges().size() == 200);
    CHECK(path_graph(1).edges().size() == 0);
    const Graph g3 = path_graph(3);
    REQUIRE(g3.edges().size() == 2);
    CHECK(g3.edges()[0].i == 0);
    CHECK(g3.edges()[0].j == 1);
    CHECK(g3.edges()[1].i == 1);
    CHECK(g3.edges()[1].j == 2);
}

TEST_CASE("graph invariants") {
    Graph g(3);
    g.add_edge(0, 1);
    CHECK_THROWS_AS(g.add_edge(1, 0), Error);  // duplicate undirected edge
    CHECK_THROWS_AS(g.add_edge(2, 2), Error);  // self loop
    CHECK_THROWS_AS(g.add_edge(0, 5), IndexOutOfRange);
    CHECK_THROWS_AS(g.add_edge(1, 2, -1.0), Error);
}

TEST_CASE("proximity_graph strict inequality") {
    CHECK(proximity_graph({{0.0, 0.0}, {0.005, 0.0}}, 0.01).edges().size() == 1);
    CHECK(proximity_graph({{0.0, 0.0}, {0.02, 0.0}}, 0.01).edges().size() == 0);
    CHECK(proximity_graph({{0.0, 0.0}, {0.01, 0.0}}, 0.01).edges().size() == 0);
}

TEST_CASE("synthetic point cloud edge band and determinism") {
    const auto pts = synthetic_point_cloud(900, 42);
    REQUIRE(pts.size() == 900);
    const Graph g = proximity_graph(pts, 0.045);
    CHECK(g.edges().size() >= 5000);
    CHECK(g.edges().size() <= 10000);
    const auto comps = connected_components(g);
    CHECK(comps.size() >= 1);
    const auto giant = largest_component(g);
    CHECK(giant.size() > 600);

    const auto pts2 = synthetic_point_cloud(900, 42);
    CHECK(pts == pts2);
}

TEST_CASE("standard laplacian of the 3-path") {
    const SparseSymMatrix l = build_laplacian(path_graph(3), LaplacianKind::standard);
    const DenseMatrix d = l.to_dense();
    const double expected[3][3] = {{1, -1, 0}, {-1, 2, -1}, {0, -1, 1}};
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            CHECK(d(i, j) == doctest::Approx(expected[i][j]).epsilon(1e-15));
}

TEST_CASE("single node laplacian is the 1x1 zero") {
    for (auto kind : {LaplacianKind::standard, LaplacianKind::normalized}) {
        const SparseSymMatrix l = build_laplacian(path_graph(1), kind);
        CHECK(l.dimension() == 1);
        CHECK(l.to_dense()(0, 0) == 0.0);
    }
}

TEST_CASE("normalized laplacian of the 2-path") {
    const SparseSymMatrix l = build_laplacian(path_graph(2), LaplacianKind::normalized);
    const DenseMatrix d = l.to_dense();
    CHECK(d(0, 0) == doctest::Approx(1.0));
    CHECK(d(1, 1) == doctest::Approx(1.0));
    CHECK(d(0, 1) == doctest::Approx(-1.0));
}

TEST_CASE("laplacian sign pattern and zero row sums") {
    SplitMix64 rng(17);
    const Graph g = random_graph(30, 0.15, rng);
    const SparseSymMatrix l = build_laplacian(g, LaplacianKind::standard);
    const DenseMatrix d = l.to_dense();

    // off-diagonals <= 0, zero exactly at non-edges
    for (std::size_t i = 0; i < 30; ++i)
        for (std::size_t j = 0; j < 30; ++j)
            if (i != j) CHECK(d(i, j) <= 0.0);
    for (const auto& e : g.edges()) CHECK(d(e.i, e.j) < 0.0);

    // L 1 = 0
    for (std::size_t i = 0; i < 30; ++i) {
        double row = 0.0;
        for (std::size_t j = 0; j < 30; ++j) row += d(i, j);
        CHECK(std::abs(row) < 1e-13);
    }
}

TEST_CASE("spmv_block against dense multiply, with MV counting") {
    SplitMix64 rng(19);
    const Graph g = random_graph(20, 0.3, rng);
    const SparseSymMatrix l = build_laplacian(g, LaplacianKind::standard);
    BlockVector x(20, 3);
    for (std::size_t j = 0; j < 3; ++j) x(j, j) = 1.0;

    OpCounters counters;
    const BlockVector y = spmv_block(l, x, counters);
    CHECK(counters.mv_count == 3);

    const DenseMatrix d = l.to_dense();
    for (std::size_t j = 0; j < 3; ++j)
        for (std::size_t i = 0; i < 20; ++i) {
            double s = 0.0;
            for (std::size_t k = 0; k < 20; ++k) s += d(i, k) * x(k, j);
            CHECK(y(i, j) == doctest::Approx(s).epsilon(1e-13).scale(1.0));
        }

    BlockVector z(20, 4);
    const BlockVector zero = spmv_block(l, z, counters);
    CHECK(counters.mv_count == 7);
    CHECK(zero.frobenius_norm() == 0.0);

    BlockVector bad(19, 1);
    CHECK_THROWS_AS(spmv_block(l, bad, counters), DimensionMismatch);
}

TEST_CASE("spmv_block column read-off on the 3-path") {
    const SparseSymMatrix l = build_laplacian(path_graph(3), LaplacianKind::standard);
    BlockVector e1(3, 1);
    e1(1, 0) = 1.0;
    OpCounters counters;
    const BlockVector y = spmv_block(l, e1, counters);
    CHECK(y(0, 0) == doctest::Approx(-1.0));
    CHECK(y(1, 0) == doctest::Approx(2.0));
    CHECK(y(2, 0) == doctest::Approx(-1.0));
}

TEST_CASE("spectral_upper_bound dominates the true spectrum") {
    SUBCASE("normalized kind returns exactly 2") {
        SplitMix64 rng(23);
        const Graph g = random_graph(25, 0.2, rng);
        const SparseSymMatrix l = build_laplacian(g, LaplacianKind::normalized);
        CHECK(spectral_upper_bound(l, LaplacianKind::normalized) == 2.0);
        const auto eig = sym_eig(l.to_dense());
        CHECK(eig.eigenvalues.back() <= 2.0 + 1e-12);
    }
    SUBCASE("path-3 standard gershgorin") {
        const SparseSymMatrix l = build_laplacian(path_graph(3), LaplacianKind::standard);
        CHECK(spectral_upper_bound(l, LaplacianKind::standard) == doctest::Approx(4.0));
        const auto eig = sym_eig(l.to_dense());
        CHECK(eig.eigenvalues.back() == doctest::Approx(3.0).epsilon(1e-12));
    }
    SUBCASE("single node") {
        const SparseSymMatrix l = build_laplacian(path_graph(1), LaplacianKind::standard);
        CHECK(spectral_upper_bound(l, LaplacianKind::standard) == 0.0);
    }
    SUBCASE("random graphs up to n=500") {
        SplitMix64 rng(29);
        for (std::size_t n : {50, 200, 500}) {
            const Graph g = random_graph(n, 4.0 / static_cast<double>(n), rng);
            for (auto kind : {LaplacianKind::standard, LaplacianKind::normalized}) {
                const SparseSymMatrix l = build_laplacian(g, kind);
                const double bound = spectral_upper_bound(l, kind);
                const auto eig = sym_eig(l.to_dense());
                CHECK(eig.eigenvalues.back() <= bound + 1e-10);
            }
        }
    }
}

TEST_CASE("unit_block") {
    const BlockVector e = unit_block({0}, 2);
    CHECK(e(0, 0) == 1.0);
    CHECK(e(1, 0) == 0.0);

    const BlockVector e2 = unit_block({1, 0}, 2);  // column order follows W order
    CHECK(e2(1, 0) == 1.0);
    CHECK(e2(0, 1) == 1.0);

    CHECK_THROWS_AS(unit_block({0, 0}, 2), DuplicateNode);
    CHECK_THROWS_AS(unit_block({5}, 2), IndexOutOfRange);
}

TEST_CASE("sample_nodes stays in largest component and respects separation") {
    const auto pts = synthetic_point_cloud(900, 42);
    const Graph g = proximity_graph(pts, 0.045);
    const auto giant = largest_component(g);
    const auto sample = sample_nodes(g, 20, 7, 1.5 * 0.045);
    CHECK(sample.size() == 20);
    for (std::size_t node : sample)
        CHECK(std::find(giant.begin(), giant.end(), node) != giant.end());
    for (std::size_t a = 0; a < sample.size(); ++a)
        for (std::size_t b = a + 1; b < sample.size(); ++b) {
            const double dx = pts[sample[a]][0] - pts[sample[b]][0];
            const double dy = pts[sample[a]][1] - pts[sample[b]][1];
            CHECK(std::sqrt(dx * dx + dy * dy) >= 1.5 * 0.045);
        }
    // determinism
    CHECK(sample == sample_nodes(g, 20, 7, 1.5 * 0.045));
}
