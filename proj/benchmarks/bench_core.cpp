#include <benchmark/benchmark.h>

#include "kneserlab/chromatic.hpp"
#include "kneserlab/randmc.hpp"
#include "kneserlab/tucker.hpp"

using namespace kneserlab;

static void BM_KneserPowerGeneration(benchmark::State& state) {
    Hypergraph base = complete_k_subsets(static_cast<int>(state.range(0)), 2);
    for (auto _ : state) {
        KneserPower kp = kneser_power(base, 2);
        benchmark::DoNotOptimize(kp.power.edge_count());
    }
}
BENCHMARK(BM_KneserPowerGeneration)->Arg(7)->Arg(9);

static void BM_ChromaticKneserPower(benchmark::State& state) {
    KneserPower kp = kneser_power(complete_k_subsets(static_cast<int>(state.range(0)), 2), 2);
    ChiOptions opts;
    opts.max_vertices = 128;
    for (auto _ : state) {
        ChiResult res = chromatic_number(kp.power, opts);
        benchmark::DoNotOptimize(res.lo);
    }
}
BENCHMARK(BM_ChromaticKneserPower)->Arg(7)->Arg(8)->Arg(9);

static void BM_AlternationSearch(benchmark::State& state) {
    Hypergraph h = complete_k_subsets(static_cast<int>(state.range(0)), 2);
    VertexOrdering id = VertexOrdering::identity(h.vertex_count());
    for (auto _ : state) {
        int a = alt_r_sigma_q(h, id, 2, 3);
        benchmark::DoNotOptimize(a);
    }
}
BENCHMARK(BM_AlternationSearch)->Arg(8)->Arg(9);

static void BM_ExactOrderingMinimum(benchmark::State& state) {
    Hypergraph h = complete_k_subsets(6, 2);
    for (auto _ : state) {
        SigmaSearchResult res = alt_r_q(h, 2, 1, SigmaMode::exact);
        benchmark::DoNotOptimize(res.value);
    }
}
BENCHMARK(BM_ExactOrderingMinimum);

static void BM_PopularColorMap(benchmark::State& state) {
    Hypergraph h = complete_k_subsets(5, 2);
    VertexOrdering id = VertexOrdering::identity(5);
    Coloring c;
    c.num_colors = 2;
    for (int i = 0; i < h.edge_count(); ++i) c.values.push_back(1 + i % 2);
    for (auto _ : state) {
        TuckerMap map = build_popular_color_map(h, id, c, 2, 1, 5, 1);
        benchmark::DoNotOptimize(map.table.size());
    }
}
BENCHMARK(BM_PopularColorMap);

static void BM_SampleSubhypergraph(benchmark::State& state) {
    KneserPower kp = kneser_power(complete_k_subsets(9, 2), 2);
    std::uint64_t trial = 0;
    for (auto _ : state) {
        PowerHypergraph s = sample_subhypergraph(kp.power, 0.5, 11, trial++);
        benchmark::DoNotOptimize(s.edge_count());
    }
}
BENCHMARK(BM_SampleSubhypergraph);

static void BM_PhiloxBlock(benchmark::State& state) {
    std::uint64_t ctr = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(rng_u32(42, 7, ctr++));
    }
}
BENCHMARK(BM_PhiloxBlock);

BENCHMARK_MAIN();
