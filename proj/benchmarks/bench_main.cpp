#include <benchmark/benchmark.h>

#include "lmgsim/oracle.hpp"
#include "lmgsim/run.hpp"

namespace {

lmg::ModelParams symmetric_params() {
  lmg::ModelParams params;
  params.lambda = 1.25;
  params.lambda_prime = 2.0;
  params.n_spins = 1000;
  params.kx = 1.0;
  params.ky = -1.0;
  params.kz = 1.0;
  return params;
}

void BM_MakeContext(benchmark::State& state) {
  const auto params = symmetric_params();
  for (auto _ : state) {
    benchmark::DoNotOptimize(lmg::make_context(params));
  }
}
BENCHMARK(BM_MakeContext);

void BM_ReducedState(benchmark::State& state) {
  const auto ctx = lmg::make_context(symmetric_params());
  double t = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(lmg::reduced_state(ctx, t));
    t += 0.005;
  }
}
BENCHMARK(BM_ReducedState);

void BM_EvaluateCorrelations(benchmark::State& state) {
  const auto ctx = lmg::make_context(symmetric_params());
  const lmg::XState x = lmg::reduced_state(ctx, 1.7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(lmg::evaluate(x, 1.7));
  }
}
BENCHMARK(BM_EvaluateCorrelations);

void BM_Timeseries801(benchmark::State& state) {
  lmg::RunConfig config;
  config.params = symmetric_params();
  config.t_max = 4.0;
  config.steps = 801;
  for (auto _ : state) {
    benchmark::DoNotOptimize(lmg::run_timeseries(config));
  }
}
BENCHMARK(BM_Timeseries801)->Unit(benchmark::kMillisecond);

void BM_DenseEvolveN20(benchmark::State& state) {
  auto params = symmetric_params();
  params.n_spins = 20;
  const lmg::oracle::DenseEvolver evolver(params);
  const lmg::XState initial =
      lmg::initial_xstate(params.kx, params.ky, params.kz);
  double t = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(evolver.evolve(initial, t));
    t += 0.1;
  }
}
BENCHMARK(BM_DenseEvolveN20);

void BM_DiscordBruteforce(benchmark::State& state) {
  const lmg::XState x = lmg::initial_xstate(1.0, -0.2, 0.2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(lmg::oracle::discord_bruteforce(x, 64, 10));
  }
}
BENCHMARK(BM_DiscordBruteforce)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
