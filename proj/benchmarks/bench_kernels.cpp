#include <benchmark/benchmark.h>

#include "graphkrylov/block_lanczos.hpp"
#include "graphkrylov/chebyshev.hpp"
#include "graphkrylov/graph.hpp"
#include "graphkrylov/spectral_oracle.hpp"

using namespace graphkrylov;

namespace {

struct Fixture {
    SparseSymMatrix laplacian;
    BlockVector ew;
    KernelFunction phi = KernelFunction::diffusion(20.0);

    explicit Fixture(std::size_t n) {
        const Graph g = proximity_graph(synthetic_point_cloud(n, 42), 0.045);
        laplacian = build_laplacian(g, LaplacianKind::normalized);
        ew = unit_block(sample_nodes(g, 20, 7, 0.0), n);
    }
};

Fixture& fixture(std::size_t n) {
    static Fixture f900(900);
    static Fixture f300(300);
    return n == 900 ? f900 : f300;
}

} // namespace

static void BM_SpmvBlock(benchmark::State& state) {
    Fixture& f = fixture(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        OpCounters counters;
        auto y = spmv_block(f.laplacian, f.ew, counters);
        benchmark::DoNotOptimize(y.data());
    }
}
BENCHMARK(BM_SpmvBlock)->Arg(300)->Arg(900);

static void BM_ClassicalBlockLanczos(benchmark::State& state) {
    Fixture& f = fixture(900);
    const std::size_t m = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        OpCounters counters;
        auto fact = classical_block_lanczos(f.laplacian, f.ew, m, counters);
        auto block = cbl_approximate(fact, f.phi, 2.0, counters);
        benchmark::DoNotOptimize(block.data());
    }
}
BENCHMARK(BM_ClassicalBlockLanczos)->Arg(5)->Arg(10)->Arg(20);

static void BM_GlobalBlockLanczos(benchmark::State& state) {
    Fixture& f = fixture(900);
    const std::size_t m = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        OpCounters counters;
        auto fact = global_block_lanczos(f.laplacian, f.ew, m, counters);
        auto block = gbl_approximate(fact, f.phi, 2.0, counters);
        benchmark::DoNotOptimize(block.data());
    }
}
BENCHMARK(BM_GlobalBlockLanczos)->Arg(5)->Arg(10)->Arg(20);

static void BM_SequentialLanczos(benchmark::State& state) {
    Fixture& f = fixture(900);
    const std::size_t m = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        OpCounters counters;
        auto block = sequential_lanczos_approximate(f.laplacian, f.ew, m, f.phi, 2.0, counters);
        benchmark::DoNotOptimize(block.data());
    }
}
BENCHMARK(BM_SequentialLanczos)->Arg(5)->Arg(10)->Arg(20);

static void BM_ChebApply(benchmark::State& state) {
    Fixture& f = fixture(900);
    const std::size_t m = static_cast<std::size_t>(state.range(0));
    const auto coeffs = cheb_coefficients(f.phi, 2.0, m);
    for (auto _ : state) {
        OpCounters counters;
        auto block = cheb_apply(f.laplacian, f.ew, coeffs, counters);
        benchmark::DoNotOptimize(block.data());
    }
}
BENCHMARK(BM_ChebApply)->Arg(5)->Arg(10)->Arg(20)->Arg(60);

static void BM_DenseOracle(benchmark::State& state) {
    Fixture& f = fixture(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        DenseSpectralOracle oracle(f.laplacian);
        benchmark::DoNotOptimize(oracle.eigenvalues().data());
    }
}
BENCHMARK(BM_DenseOracle)->Arg(300)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
