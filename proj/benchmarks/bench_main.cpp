#include <benchmark/benchmark.h>

#include <memory>
#include <random>

#include "chroma/coloring.hpp"
#include "chroma/complex.hpp"
#include "chroma/gf2.hpp"
#include "chroma/graph.hpp"
#include "chroma/homology.hpp"

namespace {

void BM_Gf2Rank(benchmark::State& state) {
    const int n = int(state.range(0));
    std::mt19937_64 rng(12345);
    chroma::Gf2Matrix m(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            if (rng() % 2) m.set(r, c);
    for (auto _ : state) benchmark::DoNotOptimize(chroma::rank_gf2(m));
    state.SetComplexityN(n);
}
BENCHMARK(BM_Gf2Rank)->Arg(64)->Arg(256)->Arg(1024)->Complexity();

void BM_EnumerateSkeleton(benchmark::State& state) {
    const int dim = int(state.range(0));
    chroma::Graph g = chroma::reduced_exponential(3, 5);
    chroma::SimplicialComplex k =
        chroma::SimplicialComplex::neighborhood(g, chroma::SimplicialComplex::Backing::Oracle);
    for (auto _ : state) {
        auto levels = chroma::enumerate_simplices(k, dim);
        benchmark::DoNotOptimize(levels.total());
    }
}
BENCHMARK(BM_EnumerateSkeleton)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_MuStatusSweep(benchmark::State& state) {
    auto ctx = std::make_shared<const chroma::ColoringContext>(3, 4);
    auto levels = chroma::enumerate_simplices(ctx->complex(), int(state.range(0)));
    for (auto _ : state) {
        chroma::MuOracle mu(ctx);  // fresh memo each iteration
        int critical = 0;
        for (const auto& lvl : levels.by_dim)
            for (const auto& s : lvl)
                if (mu.status(s).kind == chroma::MatchKind::Critical) ++critical;
        benchmark::DoNotOptimize(critical);
    }
}
BENCHMARK(BM_MuStatusSweep)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_FoldExponential(benchmark::State& state) {
    const int n = int(state.range(0)), m = int(state.range(1));
    chroma::Graph e = chroma::exponential_graph(chroma::complete_graph(m), chroma::complete_graph(n));
    for (auto _ : state) {
        auto folded = chroma::fold_reduce(e);
        benchmark::DoNotOptimize(folded.vertex_count());
    }
}
BENCHMARK(BM_FoldExponential)->Args({4, 3})->Args({5, 3})->Args({5, 4})->Unit(benchmark::kMillisecond);

void BM_BettiBruteForce34(benchmark::State& state) {
    chroma::Graph g = chroma::reduced_exponential(3, 4);
    chroma::SimplicialComplex k =
        chroma::SimplicialComplex::neighborhood(g, chroma::SimplicialComplex::Backing::Oracle);
    for (auto _ : state) {
        auto betti = chroma::betti_gf2(k, int(state.range(0)), true);
        benchmark::DoNotOptimize(betti.betti.data());
    }
}
BENCHMARK(BM_BettiBruteForce34)->Arg(1)->Arg(3)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
