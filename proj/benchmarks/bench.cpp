#include <benchmark/benchmark.h>

#include "arithdyn/dynatomic.hpp"
#include "arithdyn/orbits.hpp"

using namespace arithdyn;

static void BM_IterateSymbolic(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(iterate_pair(MapFamily::symbolic(), n));
}
BENCHMARK(BM_IterateSymbolic)->DenseRange(3, 7)->Unit(benchmark::kMillisecond);

static void BM_DynatomicSymbolic(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(dynatomic_poly(MapFamily::symbolic(), n));
}
BENCHMARK(BM_DynatomicSymbolic)->DenseRange(3, 7)->Unit(benchmark::kMillisecond);

static void BM_DynatomicConcreteK(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  const MapFamily fam(BigRat(1), std::nullopt);
  for (auto _ : state) benchmark::DoNotOptimize(dynatomic_poly(fam, n));
}
BENCHMARK(BM_DynatomicConcreteK)->DenseRange(4, 8)->Unit(benchmark::kMillisecond);

static void BM_Closure(benchmark::State& state) {
  const BigRat b(BigInt(state.range(0)), BigInt(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(preperiodic_closure(BigRat(1), b));
}
BENCHMARK(BM_Closure)->Args({-2, 1})->Args({-1, 1})->Args({7, 3})->Unit(benchmark::kMicrosecond);

static void BM_Scan(benchmark::State& state) {
  const ScanRange range{state.range(0), state.range(0)};
  for (auto _ : state) benchmark::DoNotOptimize(scan(BigRat(1), range, 1));
}
BENCHMARK(BM_Scan)->Arg(5)->Arg(10)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
