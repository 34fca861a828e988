#include <benchmark/benchmark.h>

#include <random>

#include "ceva/examples.hpp"
#include "ceva/partition.hpp"

using namespace ceva;

static void BM_ClassifyEqualRows(benchmark::State& state) {
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> u(-5, 5);
    for (auto _ : state) {
        EqualRowsParams p{u(rng), u(rng), u(rng)};
        if (std::abs(p.lambda + p.mu + p.gamma) < 1e-3)
            continue;
        benchmark::DoNotOptimize(classify_equal_rows(p));
    }
}
BENCHMARK(BM_ClassifyEqualRows);

static void BM_ClassifyProportionalRows(benchmark::State& state) {
    std::mt19937_64 rng(2);
    std::uniform_real_distribution<double> u(-5, 5);
    for (auto _ : state) {
        ProportionalRowsParams p{u(rng), u(rng), u(rng), u(rng), u(rng)};
        benchmark::DoNotOptimize(classify_proportional_rows(p));
    }
}
BENCHMARK(BM_ClassifyProportionalRows);

static void BM_ChainClassify(benchmark::State& state) {
    RunConfig cfg = example_config(1);
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(0, 8);
    for (auto _ : state) {
        double s = u(rng);
        benchmark::DoNotOptimize(chain_classify(cfg.chain, s, s + 0.5));
    }
}
BENCHMARK(BM_ChainClassify);

static void BM_Scan1D(benchmark::State& state) {
    RunConfig cfg = example_config(1);
    for (auto _ : state)
        benchmark::DoNotOptimize(
            scan_1d(cfg.chain, 0, 8, (int)state.range(0), cfg.tol_zero, cfg.tol_bisect));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Scan1D)->Arg(256)->Arg(1024)->Arg(4096)->Complexity();

BENCHMARK_MAIN();
