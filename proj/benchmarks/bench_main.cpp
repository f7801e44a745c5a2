#include <benchmark/benchmark.h>

#include "stex/specfun.hpp"

using namespace stex;

static void BM_Dilog(benchmark::State& state) {
  const BigComplex z(BigFloat("0.7"), BigFloat("0.3"));
  for (auto _ : state) benchmark::DoNotOptimize(dilog(z));
}
BENCHMARK(BM_Dilog);

BENCHMARK_MAIN();
