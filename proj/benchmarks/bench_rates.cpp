#include <benchmark/benchmark.h>

#include "orcd/rates.hpp"

namespace {

void BM_ParallelBinarySweep(benchmark::State& state) {
  const orcd::RateFamily base = orcd::ParallelBinaryMrcd{0.0, 0.15, 1.2};
  const auto grid = orcd::linspace(0.0, 0.5, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(orcd::sweep(base, "delta", grid));
}
BENCHMARK(BM_ParallelBinarySweep)->Arg(201)->Arg(2001)->Unit(benchmark::kMicrosecond);

void BM_BinarySweep(benchmark::State& state) {
  const orcd::RateFamily base = orcd::BinaryMrcd{0.0, 0.5, 0.25};
  const auto grid = orcd::linspace(0.0, 0.5, 201);
  for (auto _ : state) benchmark::DoNotOptimize(orcd::sweep(base, "delta", grid));
}
BENCHMARK(BM_BinarySweep)->Unit(benchmark::kMicrosecond);

void BM_GaussianSweep(benchmark::State& state) {
  const orcd::RateFamily base = orcd::GaussianMrcd{0.3, 0.0, 1.0};
  const auto grid = orcd::linspace(0.0, 1.0, 201);
  for (auto _ : state) benchmark::DoNotOptimize(orcd::sweep(base, "rho", grid));
}
BENCHMARK(BM_GaussianSweep)->Unit(benchmark::kMicrosecond);

}  // namespace
