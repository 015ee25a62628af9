#include <benchmark/benchmark.h>

#include "volrig/bipyramid.hpp"

using namespace volrig;

static void BM_BuildSystem(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    const PinnedConfiguration p = random_pinned_configuration(2, n, 3);
    for (auto _ : state)
        benchmark::DoNotOptimize(build_system(p).f.degree());
}
BENCHMARK(BM_BuildSystem)->Arg(6)->Arg(8)->Arg(10)->Arg(12);

static void BM_CountClasses(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    const PinnedConfiguration p = random_pinned_configuration(2, n, 3);
    for (auto _ : state)
        benchmark::DoNotOptimize(count_congruence_classes(p));
}
BENCHMARK(BM_CountClasses)->Arg(6)->Arg(8)->Arg(10);
