#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "orcd/blahut_arimoto.hpp"
#include "orcd/info.hpp"
#include "orcd/pmf.hpp"

namespace {

std::vector<double> simplex(std::mt19937_64& rng, std::size_t n) {
  std::exponential_distribution<double> e(1.0);
  std::vector<double> v(n);
  double sum = 0;
  for (double& x : v) sum += x = e(rng);
  for (double& x : v) x /= sum;
  return v;
}

// Square channel with random columns.
orcd::StochasticMatrix random_channel(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<double> entries(n * n);
  for (std::size_t in = 0; in < n; ++in) {
    const auto col = simplex(rng, n);
    for (std::size_t out = 0; out < n; ++out) entries[out * n + in] = col[out];
  }
  return orcd::StochasticMatrix(n, n, std::move(entries));
}

void BM_InverseBinaryEntropy(benchmark::State& state) {
  double v = 0.0;
  for (auto _ : state) {
    v += 0.001;
    if (v > 1.0) v = 0.0;
    benchmark::DoNotOptimize(orcd::inv_binary_entropy(v));
  }
}
BENCHMARK(BM_InverseBinaryEntropy);

void BM_FBoundBsc(benchmark::State& state) {
  double s = 0.0;
  for (auto _ : state) {
    s += 0.001;
    if (s > 1.0) s = 0.0;
    benchmark::DoNotOptimize(orcd::f_bound_bsc(0.1, s));
  }
}
BENCHMARK(BM_FBoundBsc);

void BM_ConditionalMutualInformation(benchmark::State& state) {
  const std::size_t k = state.range(0);
  std::mt19937_64 rng(1);
  const orcd::JointPmf j({k, k, k, k}, simplex(rng, k * k * k * k));
  for (auto _ : state) benchmark::DoNotOptimize(orcd::conditional_mutual_information(j, {0, 1}, {2}, {3}));
}
BENCHMARK(BM_ConditionalMutualInformation)->Arg(2)->Arg(4)->Arg(8);

void BM_BlahutArimoto(benchmark::State& state) {
  const orcd::StochasticMatrix w = random_channel(state.range(0), 9);
  for (auto _ : state) benchmark::DoNotOptimize(orcd::blahut_arimoto(w).capacity);
}
BENCHMARK(BM_BlahutArimoto)->Arg(2)->Arg(8)->Arg(32)->Unit(benchmark::kMicrosecond);

}  // namespace
