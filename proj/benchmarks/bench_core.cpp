#include <benchmark/benchmark.h>

#include "pdimer/correlations.hpp"
#include "pdimer/dynamics.hpp"
#include "pdimer/random.hpp"

using namespace pdimer;

static void BM_Eigensystem4(benchmark::State& state) {
  Rng rng(1);
  const auto rho = random_density_matrix(rng).matrix();
  for (auto _ : state) benchmark::DoNotOptimize(hermitian_eigensystem(rho));
}
BENCHMARK(BM_Eigensystem4);

static void BM_Concurrence(benchmark::State& state) {
  Rng rng(2);
  const auto rho = random_density_matrix(rng);
  for (auto _ : state) benchmark::DoNotOptimize(concurrence(rho));
}
BENCHMARK(BM_Concurrence);

static void BM_CorrelationReport(benchmark::State& state) {
  Rng rng(3);
  const auto rho = random_density_matrix(rng);
  for (auto _ : state) benchmark::DoNotOptimize(correlation_report(rho));
}
BENCHMARK(BM_CorrelationReport)->Unit(benchmark::kMicrosecond);

static void BM_LindbladRhs(benchmark::State& state) {
  DriveConfig d;
  d.amplitude_1 = 1.5;
  const auto cp = collective_params(WaveguideParams{}, 0.75);
  const auto h = effective_hamiltonian(cp, d, true);
  Rng rng(4);
  const auto rho = random_density_matrix(rng).matrix();
  for (auto _ : state) benchmark::DoNotOptimize(lindblad_rhs(rho, h, cp.decay_rate, cp.collective_decay));
}
BENCHMARK(BM_LindbladRhs);

// One fig3 grid point: t in [0, 20], 2001 samples, dt = 1e-3.
static void BM_EvolveFig3Point(benchmark::State& state) {
  DriveConfig d;
  d.amplitude_1 = 1.5;
  d.switch_off = 10.0;
  const auto cp = collective_params(WaveguideParams{}, 0.75);
  const auto times = uniform_times(20.0, 2001);
  for (auto _ : state) benchmark::DoNotOptimize(evolve(ground_state(), cp, d, times));
}
BENCHMARK(BM_EvolveFig3Point)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
