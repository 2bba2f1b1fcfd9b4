#include <benchmark/benchmark.h>

#include "cavent/dynamics.hpp"
#include "cavent/entanglement.hpp"
#include "cavent/oracle.hpp"
#include "cavent/sweep.hpp"

namespace {

void BM_TwoAtomDensityFock(benchmark::State& state) {
  const auto d = cavent::fock_distribution(static_cast<int>(state.range(0)));
  const cavent::RabiAngle gt(1.7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(cavent::two_atom_density(d, gt));
  }
}
BENCHMARK(BM_TwoAtomDensityFock)->Arg(0)->Arg(100);

void BM_TwoAtomDensityThermal(benchmark::State& state) {
  const auto d = cavent::thermal_distribution(
      static_cast<double>(state.range(0)), 1e-12);
  const cavent::RabiAngle gt(1.7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(cavent::two_atom_density(d, gt));
  }
}
BENCHMARK(BM_TwoAtomDensityThermal)->Arg(1)->Arg(10);

void BM_EntanglementOfFormation(benchmark::State& state) {
  const auto rho = cavent::fock_two_atom_density(0, cavent::RabiAngle(2.0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(cavent::entanglement_of_formation(rho));
  }
}
BENCHMARK(BM_EntanglementOfFormation);

void BM_OracleDensityFock(benchmark::State& state) {
  const auto d = cavent::fock_distribution(static_cast<int>(state.range(0)));
  const cavent::RabiAngle gt(1.7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(cavent::oracle::oracle_two_atom_density(d, gt));
  }
}
BENCHMARK(BM_OracleDensityFock)->Arg(0)->Arg(10);

void BM_OracleDensityThermal(benchmark::State& state) {
  const auto d = cavent::thermal_distribution(
      static_cast<double>(state.range(0)), 1e-12);
  const cavent::RabiAngle gt(1.7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(cavent::oracle::oracle_two_atom_density(d, gt));
  }
}
BENCHMARK(BM_OracleDensityThermal)->Arg(1)->Arg(10);

void BM_SweepFock0(benchmark::State& state) {
  cavent::SweepConfig cfg;
  cfg.steps = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(cavent::run_sweep(cfg));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SweepFock0)->Arg(256);

}  // namespace

BENCHMARK_MAIN();
