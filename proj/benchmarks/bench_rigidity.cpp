#include <benchmark/benchmark.h>

#include "volrig/rigidity.hpp"

using namespace volrig;

static void BM_RigidityRank(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    const Hypergraph h = bipyramid(n);
    const Configuration p = random_generic_configuration(2, n, 1);
    for (auto _ : state)
        benchmark::DoNotOptimize(rank(rigidity_matrix(h, p)));
}
BENCHMARK(BM_RigidityRank)->Arg(6)->Arg(10)->Arg(16)->Arg(24);

static void BM_FlexSpace(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    const Hypergraph h = bipyramid(n);
    const Configuration p = random_generic_configuration(2, n, 2);
    for (auto _ : state)
        benchmark::DoNotOptimize(flex_space(h, p).dimension());
}
BENCHMARK(BM_FlexSpace)->Arg(6)->Arg(12);
BENCHMARK_MAIN();
