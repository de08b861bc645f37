#include "rank2/cluster.hpp"
#include "rank2/combinat.hpp"
#include "rank2/dyck.hpp"
#include "rank2/laurent.hpp"

#include <benchmark/benchmark.h>

namespace {

void BM_GeneratingPoly(benchmark::State& state) {
    const auto path = rank2::build_path(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(rank2::generating_poly(path));
    }
}
BENCHMARK(BM_GeneratingPoly)->Args({3, 5})->Args({3, 6})->Args({3, 7})->Args({4, 6})->Unit(benchmark::kMillisecond);

void BM_Oracle(benchmark::State& state) {
    const auto r = static_cast<int>(state.range(0));
    const auto n = state.range(1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(rank2::oracle(r, n));
    }
}
BENCHMARK(BM_Oracle)->Args({3, 7})->Args({4, 6})->Args({2, 20})->Unit(benchmark::kMillisecond);

void BM_ClusterVariable(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(rank2::cluster_variable(3, 7));
    }
}
BENCHMARK(BM_ClusterVariable)->Unit(benchmark::kMillisecond);

void BM_LaurentMul(benchmark::State& state) {
    const auto p = rank2::oracle(3, 6);
    for (auto _ : state) {
        benchmark::DoNotOptimize(p * p);
    }
}
BENCHMARK(BM_LaurentMul)->Unit(benchmark::kMillisecond);

void BM_BruteForce(benchmark::State& state) {
    const auto path = rank2::build_path(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(rank2::bruteforce_poly(path));
    }
}
BENCHMARK(BM_BruteForce)->Args({3, 5})->Args({2, 16})->Args({3, 6})->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
