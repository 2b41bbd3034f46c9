#include <benchmark/benchmark.h>

#include "edist/estimate.hpp"
#include "edist/instances.hpp"
#include "edist/tree_distance.hpp"

using namespace edist;

static void BM_ExactTreeDistance(benchmark::State& state) {
    Rng rng(1);
    const std::int64_t n = state.range(0);
    Text x = random_text(n, 64, rng);
    Text y = with_random_edits(x, n / 32, rng);
    y.symbols.resize(static_cast<std::size_t>(n), 0);
    auto params = make_tree_params(n, 16, 4.0, 7);
    for (auto _ : state)
        benchmark::DoNotOptimize(exact_tree_distance(x, y, params));
    state.SetComplexityN(n);
}
BENCHMARK(BM_ExactTreeDistance)->Arg(256)->Arg(1024)->Arg(4096)->Complexity();

static void BM_Estimate(benchmark::State& state) {
    Rng rng(2);
    const std::int64_t n = 4096;
    Text x = random_text(n, 64, rng);
    Text y = with_random_edits(x, n / 32, rng);
    y.symbols.resize(static_cast<std::size_t>(n), 0);
    auto params = make_tree_params(n, 16, static_cast<double>(state.range(0)), 7);
    auto tree = build_sample_tree(params);
    for (auto _ : state)
        benchmark::DoNotOptimize(estimate_tree_distance(x, y, tree));
}
BENCHMARK(BM_Estimate)->Arg(2)->Arg(8)->Arg(64);

static void BM_SampleTree(benchmark::State& state) {
    auto params = make_tree_params(1 << 20, 32, 4.0, 11, /*c_p=*/6.25e-5);
    for (auto _ : state) {
        params.seed += 1;
        benchmark::DoNotOptimize(build_sample_tree(params).query_count());
    }
}
BENCHMARK(BM_SampleTree);
