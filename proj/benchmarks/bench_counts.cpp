#include <benchmark/benchmark.h>

#include "sumdiff/bigcomb.hpp"
#include "sumdiff/counts.hpp"
#include "sumdiff/oracle.hpp"
#include "sumdiff/search.hpp"

using namespace sumdiff;

namespace {

void BM_Binomial(benchmark::State& state) {
    const auto n = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(binomial(n, n / 2));
}
BENCHMARK(BM_Binomial)->Arg(1000)->Arg(100000);

void BM_LogOf(benchmark::State& state) {
    const BigCount x = pow_int(10, static_cast<std::uint64_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(log_of(x));
}
BENCHMARK(BM_LogOf)->Arg(100)->Arg(10000);

void BM_SciRound(benchmark::State& state) {
    const BigCount x = pow_int(7, 20000);  // ~16902 digits
    for (auto _ : state) benchmark::DoNotOptimize(sci_round(x, 10));
}
BENCHMARK(BM_SciRound);

void BM_CountW(benchmark::State& state) {
    const Params p{static_cast<std::uint64_t>(state.range(0)),
                   static_cast<std::uint64_t>(state.range(1)), 5};
    for (auto _ : state) benchmark::DoNotOptimize(count_w(p));
}
BENCHMARK(BM_CountW)->Args({80, 64})->Args({1280, 1024})->Unit(benchmark::kMicrosecond);

void BM_CountDiff(benchmark::State& state) {
    const Params p{static_cast<std::uint64_t>(state.range(0)),
                   static_cast<std::uint64_t>(state.range(1)), 5};
    for (auto _ : state) benchmark::DoNotOptimize(count_diff(p));
}
BENCHMARK(BM_CountDiff)->Args({80, 64})->Args({1280, 1024})->Unit(benchmark::kMillisecond);

void BM_SetCounts(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(set_counts({80, 64, 5}));
}
BENCHMARK(BM_SetCounts)->Unit(benchmark::kMillisecond);

// the paper-scale sweep: 896 grid points, exact counts, single thread
void BM_SweepPaperGrid(benchmark::State& state) {
    const search::SearchSpec spec{{1, 128}, {64}, {1, 7}, 5, false};
    for (auto _ : state) benchmark::DoNotOptimize(search::sweep(spec, 1));
}
BENCHMARK(BM_SweepPaperGrid)->Unit(benchmark::kMillisecond);

void BM_OracleExample1(benchmark::State& state) {
    for (auto _ : state) {
        const auto es = oracle::build_u({4, 8, 3});
        benchmark::DoNotOptimize(oracle::diffset_size(es));
    }
}
BENCHMARK(BM_OracleExample1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
