#include <benchmark/benchmark.h>

#include "rminor/generators.hpp"
#include "rminor/minor.hpp"
#include "rminor/oracles.hpp"

using namespace rminor;

namespace {

RootedGraph sampled_antiprism(int k) {
    Graph g = antiprism(k);
    return RootedGraph(g, greedy_root_sample(g, 5));
}

void BM_safe_contraction_scan(benchmark::State& state) {
    RootedGraph rg = sampled_antiprism(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(find_safe_contraction(rg));
    }
}
BENCHMARK(BM_safe_contraction_scan)->Arg(8)->Arg(12)->Arg(16);

void BM_four_connected_minor(benchmark::State& state) {
    RootedGraph rg = sampled_antiprism(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(four_connected_x_minor(rg));
    }
}
BENCHMARK(BM_four_connected_minor)->Arg(8)->Arg(12)->Arg(16);

void BM_topological_minor_gt(benchmark::State& state) {
    FamilyInstance inst = gen_gt(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(topological_x_minor(inst.rooted, 3));
    }
}
BENCHMARK(BM_topological_minor_gt)->Arg(7)->Arg(9);

void BM_minor_oracle(benchmark::State& state) {
    Graph host = antiprism(5);
    GraphBuilder b;
    for (int i = 0; i < 4; ++i) b.add_vertex();
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) b.add_edge(i, j);
    Graph k4 = b.build();
    for (auto _ : state) {
        benchmark::DoNotOptimize(has_minor_brute(host, k4));
    }
}
BENCHMARK(BM_minor_oracle);

void BM_spanning_cycle_oracle(benchmark::State& state) {
    Graph g = antiprism(6);
    RootedGraph rg(g, g.vertices());
    for (auto _ : state) {
        benchmark::DoNotOptimize(exists_x_spanning_cycle(rg));
    }
}
BENCHMARK(BM_spanning_cycle_oracle);

void BM_tutte_path_brute(benchmark::State& state) {
    Graph g = antiprism(5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(find_tutte_path_brute(g, 0, 5, Edge{1, 2}));
    }
}
BENCHMARK(BM_tutte_path_brute);

} // namespace

BENCHMARK_MAIN();
