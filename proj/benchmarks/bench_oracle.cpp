#include <benchmark/benchmark.h>

#include "volrig/oracle.hpp"

using namespace volrig;

static void BM_Oracle(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    const PinnedConfiguration p = random_pinned_configuration(2, n, 5);
    OracleSettings settings;
    settings.starts = static_cast<int>(state.range(1));
    for (auto _ : state)
        benchmark::DoNotOptimize(solve_equivalence_system(bipyramid(n), p, settings).count);
}
BENCHMARK(BM_Oracle)->Args({6, 50})->Args({7, 200})->Unit(benchmark::kMillisecond);
