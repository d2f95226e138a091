#include <benchmark/benchmark.h>

#include "legstir/gamma.hpp"
#include "legstir/partitions.hpp"
#include "legstir/realroots.hpp"
#include "legstir/triangles.hpp"

using namespace legstir;

static void BM_LegendreStirlingTriangle(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        IntTriangle t(IntFamily::legendre_stirling);
        benchmark::DoNotOptimize(t.row(n));
    }
}
BENCHMARK(BM_LegendreStirlingTriangle)->Arg(50)->Arg(100)->Arg(200);

static void BM_JacobiStirlingTriangle(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        PolyTriangle t(PolyFamily::jacobi_stirling);
        benchmark::DoNotOptimize(t.row(n));
    }
}
BENCHMARK(BM_JacobiStirlingTriangle)->Arg(20)->Arg(40);

static void BM_GammaRows(benchmark::State& state) {
    const auto k = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        GammaTable t;
        benchmark::DoNotOptimize(t.row(k));
    }
}
BENCHMARK(BM_GammaRows)->Arg(10)->Arg(20);

static void BM_GammaViaOde(benchmark::State& state) {
    const auto k = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(gamma_poly_via_ode(k));
}
BENCHMARK(BM_GammaViaOde)->Arg(10)->Arg(20);

static void BM_EnumeratePartitions(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        std::size_t count = 0;
        for_each_partition(n, [&](const LSPartition&) { ++count; });
        benchmark::DoNotOptimize(count);
    }
}
BENCHMARK(BM_EnumeratePartitions)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

static void BM_VerifyConjecture(benchmark::State& state) {
    const auto k = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(verify_conjecture(k));
}
BENCHMARK(BM_VerifyConjecture)->DenseRange(2, 6, 2)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
