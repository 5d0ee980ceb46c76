// Serial vs OpenMP throughput of the grid kernels.

#include <benchmark/benchmark.h>

#include "vewave/cm_checks.hpp"
#include "vewave/grid_eval.hpp"

using namespace vewave;

namespace {

const MaterialModel& zener_model() {
  static MaterialModel m = make_zener(1.0, 1.0, 1.0, 1.0);
  return m;
}

const AttenuationKernel& powerlaw_kernel() {
  static AttenuationKernel k =
      AttenuationKernel::from(make_powerlaw_g(1.0, 1.0, 0.5, 1.0));
  return k;
}

void BM_attenuation_table(benchmark::State& state) {
  auto omegas = geomspace(1e-3, 1e3, 4096);
  Exec exec = state.range(0) ? Exec::parallel : Exec::serial;
  for (auto _ : state) {
    auto table = attenuation_table(zener_model(), omegas, exec);
    benchmark::DoNotOptimize(table.attenuation.data());
  }
}

void BM_kernel_table(benchmark::State& state) {
  auto taus = geomspace(1e-3, 1e2, 96);
  Exec exec = state.range(0) ? Exec::parallel : Exec::serial;
  for (auto _ : state) {
    auto table = kernel_table(powerlaw_kernel(), 1.0, taus, exec);
    benchmark::DoNotOptimize(table.H.data());
  }
}

void BM_duality_solve(benchmark::State& state) {
  DualityOptions opts;
  opts.steps = 4096;
  opts.exec = state.range(0) ? Exec::parallel : Exec::serial;
  for (auto _ : state) {
    auto G = solve_duality(zener_model().creep(), opts);
    benchmark::DoNotOptimize(G.G.data());
  }
}

}  // namespace

BENCHMARK(BM_attenuation_table)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_kernel_table)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_duality_solve)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
