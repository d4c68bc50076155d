#include <benchmark/benchmark.h>

#include <random>
#include <string>

#include "rpm/dp_baseline.hpp"
#include "rpm/oracle.hpp"
#include "rpm/solver.hpp"

namespace {

rpm::Text random_text(rpm::index_t n, int sigma, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> letter(0, sigma - 1);
    std::string s(static_cast<std::size_t>(n), 'a');
    for (auto& c : s) c = static_cast<char>('a' + letter(rng));
    return rpm::Text(s);
}

void BM_DpSerial(benchmark::State& state) {
    const auto text = random_text(static_cast<rpm::index_t>(state.range(0)), 2, 1);
    for (auto _ : state) benchmark::DoNotOptimize(rpm::dp::solve_dp(text, 4, 3));
}

void BM_DpParallel(benchmark::State& state) {
    const auto text = random_text(static_cast<rpm::index_t>(state.range(0)), 2, 1);
    for (auto _ : state) benchmark::DoNotOptimize(rpm::dp::solve_dp_parallel(text, 4, 3));
}

void BM_BruteSerial(benchmark::State& state) {
    const auto text = random_text(static_cast<rpm::index_t>(state.range(0)), 2, 2);
    for (auto _ : state) benchmark::DoNotOptimize(rpm::oracle::brute_solve(text, 2, 2));
}

void BM_BruteParallel(benchmark::State& state) {
    const auto text = random_text(static_cast<rpm::index_t>(state.range(0)), 2, 2);
    for (auto _ : state) benchmark::DoNotOptimize(rpm::oracle::brute_solve_parallel(text, 2, 2));
}

void BM_EsaBuildAndSolve(benchmark::State& state) {
    const auto text = random_text(static_cast<rpm::index_t>(state.range(0)), 4, 3);
    for (auto _ : state) benchmark::DoNotOptimize(rpm::solve(text, 10, 10));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK(BM_DpSerial)->Arg(100)->Arg(300)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DpParallel)->Arg(100)->Arg(300)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BruteSerial)->Arg(16)->Arg(24)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BruteParallel)->Arg(16)->Arg(24)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EsaBuildAndSolve)->Arg(1 << 16)->Arg(1 << 20)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
