#include <benchmark/benchmark.h>

#include "edist/exact.hpp"
#include "edist/instances.hpp"

using namespace edist;

static void BM_EditDistance(benchmark::State& state) {
    Rng rng(1);
    const std::int64_t n = state.range(0);
    Text x = random_text(n, 26, rng);
    Text y = random_text(n, 26, rng);
    for (auto _ : state) benchmark::DoNotOptimize(ed(x, y));
    state.SetComplexityN(n);
}
BENCHMARK(BM_EditDistance)->RangeMultiplier(2)->Range(256, 4096)->Complexity();

static void BM_Lcs(benchmark::State& state) {
    Rng rng(2);
    const std::int64_t n = state.range(0);
    Text x = random_text(n, 4, rng);
    Text y = random_text(n, 4, rng);
    for (auto _ : state) benchmark::DoNotOptimize(lcs(x, y));
    state.SetComplexityN(n);
}
BENCHMARK(BM_Lcs)->RangeMultiplier(2)->Range(256, 4096)->Complexity();

static void BM_BandedIndel(benchmark::State& state) {
    Rng rng(3);
    const std::int64_t n = 1 << 14;
    Text x = random_text(n, 4, rng);
    Text y = with_random_edits(x, state.range(0), rng);
    for (auto _ : state)
        benchmark::DoNotOptimize(edd_banded_certified(x, y));
}
BENCHMARK(BM_BandedIndel)->Arg(16)->Arg(64)->Arg(256);

int main(int argc, char** argv) {
    benchmark::Initialize(&argc, argv);
    if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
    benchmark::RunSpecifiedBenchmarks();
    benchmark::Shutdown();
    return 0;
}
