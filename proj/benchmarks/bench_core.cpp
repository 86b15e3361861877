#include <benchmark/benchmark.h>

#include <numbers>

#include "wigner/bounds.hpp"
#include "wigner/cli.hpp"
#include "wigner/qkd.hpp"

using namespace wigner;

static void BM_EigenHermitian4(benchmark::State& state) {
  const HermitianOperator w = wigner_operator(WignerParametrization::filipp_svozil(0.4));
  for (auto _ : state) benchmark::DoNotOptimize(eigen_hermitian(w));
}
BENCHMARK(BM_EigenHermitian4);

static void BM_WignerValue(benchmark::State& state) {
  const auto p = WignerParametrization::filipp_svozil(std::numbers::pi / 6);
  const DensityMatrix rho = density_from_pure(phi_xi_state(0.3));
  for (auto _ : state) benchmark::DoNotOptimize(wigner_value(p, rho));
}
BENCHMARK(BM_WignerValue);

static void BM_ScanQuantumExtrema(benchmark::State& state) {
  const auto steps = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(scan_quantum_extrema(0.0, std::numbers::pi, steps, kDefaultRefineTolerance, 1));
  }
}
BENCHMARK(BM_ScanQuantumExtrema)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

static void BM_Sweep(benchmark::State& state) {
  SweepConfig cfg;
  cfg.theta_steps = cfg.xi_steps = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(run_sweep(cfg, 1));
}
BENCHMARK(BM_Sweep)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);

static void BM_QkdSearch(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(qkd_violation_search(SettingTag::zero_zero, StateFamily::delta, 120, 16, 1));
  }
}
BENCHMARK(BM_QkdSearch)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
