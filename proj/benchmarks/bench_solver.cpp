#include <benchmark/benchmark.h>

#include <random>

#include "orcd/models.hpp"
#include "orcd/solver.hpp"
#include "solver_internal.hpp"

namespace {

orcd::detail::State random_state(const orcd::detail::Problem& p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.05, 1.0);
  orcd::detail::State s;
  s.joint.resize(p.nu * p.nx);
  double sum = 0;
  for (double& x : s.joint) sum += x = u(rng);
  for (double& x : s.joint) x /= sum;
  s.tc.resize(p.nu * p.ny * p.nh);
  for (std::size_t c = 0; c < p.nu * p.ny; ++c) {
    double col = 0;
    for (std::size_t h = 0; h < p.nh; ++h) col += s.tc[c * p.nh + h] = u(rng);
    for (std::size_t h = 0; h < p.nh; ++h) s.tc[c * p.nh + h] /= col;
  }
  return s;
}

void BM_ObjectiveGeneric(benchmark::State& state) {
  const orcd::DiscreteOrcd m = orcd::embed_binary({0.1, 0.5, 0.25});
  const auto p = orcd::detail::make_problem(m, state.range(0), state.range(1), 0.25, 0.0);
  const orcd::AuxiliaryScheme s = orcd::detail::to_scheme(p, random_state(p, 3));
  for (auto _ : state) benchmark::DoNotOptimize(orcd::objective(m, s, 0.0));
}
BENCHMARK(BM_ObjectiveGeneric)->Args({2, 3})->Args({5, 11});

void BM_EvaluatorFull(benchmark::State& state) {
  const orcd::DiscreteOrcd m = orcd::embed_binary({0.1, 0.5, 0.25});
  const auto p = orcd::detail::make_problem(m, state.range(0), state.range(1), 0.25, 0.0);
  const auto s = random_state(p, 3);
  orcd::detail::Evaluator eval(p);
  for (auto _ : state) benchmark::DoNotOptimize(eval(s));
}
BENCHMARK(BM_EvaluatorFull)->Args({2, 3})->Args({5, 11});

void BM_EvaluatorColumnUpdate(benchmark::State& state) {
  const orcd::DiscreteOrcd m = orcd::embed_binary({0.1, 0.5, 0.25});
  const auto p = orcd::detail::make_problem(m, state.range(0), state.range(1), 0.25, 0.0);
  const auto s = random_state(p, 3);
  orcd::detail::Evaluator eval(p);
  eval(s);
  for (auto _ : state) benchmark::DoNotOptimize(eval.with_changed_u(s, 0));
}
BENCHMARK(BM_EvaluatorColumnUpdate)->Args({2, 3})->Args({5, 11});

void BM_SolveBinary(benchmark::State& state) {
  const orcd::DiscreteOrcd m = orcd::embed_binary({0.1, 0.5, 0.25});
  orcd::SolverConfig cfg;
  cfg.restarts = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(orcd::solve_capacity(m, cfg).best_rate);
}
BENCHMARK(BM_SolveBinary)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_BruteForceBinary(benchmark::State& state) {
  const orcd::DiscreteOrcd m = orcd::embed_binary({0.1, 0.5, 0.25});
  for (auto _ : state) benchmark::DoNotOptimize(orcd::brute_force_capacity(m, {0.1}).best_rate);
}
BENCHMARK(BM_BruteForceBinary)->Unit(benchmark::kMillisecond);

}  // namespace
