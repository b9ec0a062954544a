#include <benchmark/benchmark.h>

#include "lacdhva/dhva.hpp"
#include "lacdhva/fd_solver.hpp"
#include "lacdhva/specfun.hpp"

using namespace lacdhva;

namespace {

spectrum::SystemConfig rubidium() {
  spectrum::SystemConfig cfg;
  cfg.mass = 1.443e-25;
  cfg.mu = 4.64e-22;
  cfg.area = 1.5e-10;
  cfg.natoms = 10000;
  cfg.b_eff = units::EffectiveField{8.55e18};
  cfg.sigma = spectrum::Sigma::plus;
  return cfg;
}

void BM_KummerPoly(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  double xi = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(specfun::kummer_poly(-n, 3, xi));
    xi += 1e-9;
  }
}
BENCHMARK(BM_KummerPoly)->Arg(4)->Arg(32)->Arg(256);

void BM_RadialNormQuadrature(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(specfun::radial_norm_dimensionless(5, 3));
}
BENCHMARK(BM_RadialNormQuadrature);

void BM_SolveRadialReference(benchmark::State& state) {
  const auto cfg = rubidium();
  const int m = static_cast<int>(state.range(0));
  const auto grid = fd::RadialGrid::reference(m, 4, cfg.scales().a_ac);
  for (auto _ : state) benchmark::DoNotOptimize(fd::solve_radial_fd(m, spectrum::Sigma::plus, cfg, grid, 4));
}
BENCHMARK(BM_SolveRadialReference)->Arg(0)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_SweepAndAnalyze(benchmark::State& state) {
  const auto gas = dhva::GasParameters::from(rubidium());
  const int steps = static_cast<int>(state.range(0));
  for (auto _ : state) {
    const auto pts = dhva::sweep(1.17e-19, 1.17e-18, steps, gas);
    benchmark::DoNotOptimize(dhva::analyze(pts, gas));
  }
  state.SetItemsProcessed(state.iterations() * steps);
}
BENCHMARK(BM_SweepAndAnalyze)->Arg(1000)->Arg(100000);

}  // namespace
BENCHMARK_MAIN();
