#include <random>

#include <benchmark/benchmark.h>

#include "necksplit/partitions.hpp"
#include "necksplit/split.hpp"
#include "necksplit/verify.hpp"

using namespace necksplit;

static void BM_CurveEvaluate(benchmark::State& state) {
    const Curve c = builtin_curve("circle", {}, static_cast<int>(state.range(0)));
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (auto _ : state) benchmark::DoNotOptimize(c.coordinate(unit(rng), 0));
}
BENCHMARK(BM_CurveEvaluate)->Range(64, 1 << 16);

static void BM_EnumeratePartitions(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(for_each_partition(n, 3, std::nullopt, [](const Labeling&) { return true; }));
    }
}
BENCHMARK(BM_EnumeratePartitions)->DenseRange(4, 10, 2);

static void BM_Residual(benchmark::State& state) {
    const std::vector<FeatureFunction> f = {FeatureFunction::identity(), FeatureFunction::polynomial({0, 0, 1}),
                                            FeatureFunction::window_ramp(0.2, 0.5)};
    const SplitConfiguration c{{0.1, 0.2, 0.35, 0.6, 0.7, 0.9}, {0, 1, 2, 0, 1, 2, 0}, 3};
    for (auto _ : state) benchmark::DoNotOptimize(residual(f, c));
}
BENCHMARK(BM_Residual);

static void BM_DiscreteBruteForce(benchmark::State& state) {
    // Doubling a pattern keeps every type count even.
    std::vector<int> beads;
    for (int i = 0; i < state.range(0) / 2; ++i) beads.push_back((i * 7 / 3) % 2);
    beads.insert(beads.end(), beads.begin(), beads.end());
    for (auto _ : state) benchmark::DoNotOptimize(brute_force_discrete_split(beads, 2));
}
BENCHMARK(BM_DiscreteBruteForce)->Arg(8)->Arg(12)->Arg(16)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
