#include <benchmark/benchmark.h>

#include "rminor/connectivity.hpp"
#include "rminor/generators.hpp"

using namespace rminor;

namespace {

void BM_kappa_gt(benchmark::State& state) {
    FamilyInstance inst = gen_gt(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(kappa_x(inst.rooted));
    }
}
BENCHMARK(BM_kappa_gt)->Arg(7)->Arg(10)->Arg(14);

void BM_kappa_hl(benchmark::State& state) {
    FamilyInstance inst = gen_hl(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(kappa_x(inst.rooted));
    }
}
BENCHMARK(BM_kappa_hl)->Arg(2)->Arg(4)->Arg(6);

void BM_min_separator_planar(benchmark::State& state) {
    FamilyInstance inst = make_random_planar_instance(static_cast<int>(state.range(0)), 1, 4);
    for (auto _ : state) {
        benchmark::DoNotOptimize(min_x_separator(inst.rooted));
    }
}
BENCHMARK(BM_min_separator_planar)->Arg(20)->Arg(40)->Arg(80);

} // namespace
