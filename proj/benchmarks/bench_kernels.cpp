#include <benchmark/benchmark.h>

#include <vector>

#include "cubehd/builder.hpp"
#include "cubehd/probability.hpp"

using namespace cubehd;

namespace {

std::vector<Vertex> random_vertices(int d, std::size_t count, std::uint64_t seed) {
    SplitMix64 rng(seed);
    std::vector<Vertex> out(count);
    for (Vertex& v : out) v = static_cast<Vertex>(rng.next_bits(d));
    return out;
}

void BM_HammingDistance(benchmark::State& state) {
    auto xs = random_vertices(30, 4096, 1);
    auto ys = random_vertices(30, 4096, 2);
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(hamming_distance(xs[i & 4095], ys[i & 4095]));
        ++i;
    }
}
BENCHMARK(BM_HammingDistance);

void BM_LayerAdjacent(benchmark::State& state) {
    auto xs = random_vertices(24, 4096, 3);
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(layer_adjacent(xs[i & 4095], xs[(i + 1) & 4095],
                                                xs[(i + 2) & 4095]));
        ++i;
    }
}
BENCHMARK(BM_LayerAdjacent);

void BM_PairEnumeration(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    for (auto _ : state) {
        std::uint64_t count = 0;
        for_each_nonadjacent_pair(d, [&](Vertex, Vertex) {
            ++count;
            return true;
        });
        benchmark::DoNotOptimize(count);
    }
    state.SetItemsProcessed(state.iterations() *
                            static_cast<std::int64_t>(nonadjacent_pair_count(d)));
}
BENCHMARK(BM_PairEnumeration)->Arg(8)->Arg(10)->Arg(12);

void BM_PairwiseVerify(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    SplitMix64 rng(7);
    SeedSet s = sample_seed_set(d, seed_count_for(d, 5.0), rng);
    for (auto _ : state) {
        auto report = verify_separation_pairwise(s);
        benchmark::DoNotOptimize(report.satisfied);
    }
}
BENCHMARK(BM_PairwiseVerify)->Arg(8)->Arg(10)->Arg(12);

void BM_ClasswiseVerify(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    SplitMix64 rng(7);
    SeedSet s = sample_seed_set(d, seed_count_for(d, 5.0), rng);
    for (auto _ : state) {
        auto report = verify_separation_classwise(s);
        benchmark::DoNotOptimize(report.satisfied);
    }
    state.SetItemsProcessed(state.iterations() *
                            static_cast<std::int64_t>(class_count_up_to(d, d)));
}
BENCHMARK(BM_ClasswiseVerify)->Arg(10)->Arg(12)->Arg(14)->Arg(16);

void BM_BuildRepresentation(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    std::uint64_t seed = 1;
    for (auto _ : state) {
        BuildResult result = build_representation(d, 5.0, seed++, 50);
        benchmark::DoNotOptimize(result.success);
    }
}
BENCHMARK(BM_BuildRepresentation)->Arg(8)->Arg(10);

void BM_EdgeProbExact(benchmark::State& state) {
    const int r = static_cast<int>(state.range(0));
    for (auto _ : state) {
        ExactProbability p = layer_edge_prob_exact(r);
        benchmark::DoNotOptimize(p.num.get_mpz_t());
    }
}
BENCHMARK(BM_EdgeProbExact)->Arg(100)->Arg(1000)->Arg(10000);

void BM_SqrtBoundScan(benchmark::State& state) {
    const int r_max = static_cast<int>(state.range(0));
    for (auto _ : state) {
        SqrtBoundScan scan = sqrt_bound_constant(r_max);
        benchmark::DoNotOptimize(scan.c1);
    }
}
BENCHMARK(BM_SqrtBoundScan)->Arg(10000)->Arg(1000000);

}  // namespace

BENCHMARK_MAIN();
