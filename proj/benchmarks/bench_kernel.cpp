// Microbenchmarks for the hot paths: the per-cover counting kernel, the
// cover-space sweep throughput, and deletion-contraction on the largest
// chain graph.

#include <benchmark/benchmark.h>

#include "dpcover/chromatic.hpp"
#include "dpcover/counterexample.hpp"
#include "dpcover/counting.hpp"
#include "dpcover/kernel.hpp"

using namespace dpcover;

static void BM_CountTwistedCover(benchmark::State& state) {
    G0 base = build_g0();
    Cover tw = build_g0_twisted_cover();
    CountKernel kernel(base.graph, 4);
    kernel.load(tw);
    std::uint64_t nodes = 0, result = 0;
    for (auto _ : state) {
        kernel.count(1u << 30, nodes, result);
        benchmark::DoNotOptimize(result);
    }
    state.counters["colorings"] = static_cast<double>(result);
    state.counters["nodes"] = static_cast<double>(nodes);
}
BENCHMARK(BM_CountTwistedCover);

static void BM_DpSweepPrefix(benchmark::State& state) {
    G0 base = build_g0();
    SearchSpace ss = tree_search_space(base.graph, 4);
    const std::uint64_t covers = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) {
        DpResult r = dp_search(ss, {covers * 130, 1});
        benchmark::DoNotOptimize(r.value);
        state.counters["covers"] = static_cast<double>(r.covers_scanned);
    }
}
BENCHMARK(BM_DpSweepPrefix)->Arg(100000)->Unit(benchmark::kMillisecond);

static void BM_ExtensionSweepPrefix(benchmark::State& state) {
    G0 base = build_g0();
    const std::uint64_t covers = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) {
        TriangleSweepResult r = verify_triangle_extension_sweep(base.graph, 4, covers * 40, 1);
        benchmark::DoNotOptimize(r.all_extend);
        state.counters["covers"] = static_cast<double>(r.covers_checked);
    }
}
BENCHMARK(BM_ExtensionSweepPrefix)->Arg(100000)->Unit(benchmark::kMillisecond);

static void BM_ChromaticChainEnd(benchmark::State& state) {
    G0 base = build_g0();
    std::vector<VertexSet> tris = list_triangles(base.graph);
    Graph g = base.graph;
    for (int k = 1; k <= 6; ++k) g = tessellate(g, tris[static_cast<std::size_t>(k - 1)], "d" + std::to_string(k));
    for (auto _ : state) {
        IntPoly p = chromatic_polynomial(g);
        benchmark::DoNotOptimize(p);
    }
}
BENCHMARK(BM_ChromaticChainEnd)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
