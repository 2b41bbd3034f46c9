#include <benchmark/benchmark.h>

#include "edist/rng.hpp"
#include "edist/transform.hpp"

using namespace edist;

static void BM_DistanceTransform(benchmark::State& state) {
    Rng rng(1);
    std::vector<std::int64_t> f(static_cast<std::size_t>(state.range(0)));
    for (auto& v : f) v = static_cast<std::int64_t>(rng.below(1000));
    for (auto _ : state)
        benchmark::DoNotOptimize(distance_transform(f, state.range(0) / 4));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_DistanceTransform)->RangeMultiplier(4)->Range(1 << 10, 1 << 20)->Complexity();
