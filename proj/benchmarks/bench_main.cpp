#include <benchmark/benchmark.h>

#include <numbers>

#include "nlslab/dynamics.hpp"
#include "nlslab/imethod.hpp"
#include "nlslab/rough_data.hpp"
#include "nlslab/spectral.hpp"
#include "nlslab/strichartz.hpp"

using namespace nlslab;

namespace {

Field rough(int dim, int n) {
  return rough_sample(GridSpec(dim, n, 2.0 * std::numbers::pi), RoughSpec{0.7, 1, 1.0, 1.0});
}

void BM_Transform(benchmark::State& state) {
  const Field f = rough(2, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(to_spectral(f));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(f.size()));
}
BENCHMARK(BM_Transform)->Arg(128)->Arg(256)->Arg(512);

void BM_StrangStep(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const GridSpec g(2, n, 32.0);
  const StrangStepper stepper(g, NlsModel::single(2, 4.0), 1e-3);
  std::vector<cplx> u = gaussian_profile(g, 1.0, 1.0).data();
  for (auto _ : state) {
    stepper.step(u);
    benchmark::ClobberMemory();
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(u.size()));
}
BENCHMARK(BM_StrangStep)->Arg(128)->Arg(256);

void BM_StrangStep1d(benchmark::State& state) {
  const GridSpec g(1, static_cast<int>(state.range(0)), 64.0);
  const StrangStepper stepper(g, NlsModel::single(1, 4.0), 1e-3);
  std::vector<cplx> u = gaussian_profile(g, 1.0, 1.0).data();
  for (auto _ : state) {
    stepper.step(u);
    benchmark::ClobberMemory();
  }
}
BENCHMARK(BM_StrangStep1d)->Arg(1024)->Arg(4096);

void BM_CommutatorNorm(benchmark::State& state) {
  const Field u = rough(2, static_cast<int>(state.range(0)));
  const NlsModel model = NlsModel::single(2, 2.0);
  for (auto _ : state) benchmark::DoNotOptimize(commutator_norm(u, model, {16.0, 0.6}, 2.0));
}
BENCHMARK(BM_CommutatorNorm)->Arg(128)->Arg(256);

void BM_ModifiedEnergy(benchmark::State& state) {
  const Field u = rough(2, static_cast<int>(state.range(0)));
  const NlsModel model = NlsModel::single(2, 4.0);
  for (auto _ : state) benchmark::DoNotOptimize(modified_energy(u, model, {8.0, 0.8}));
}
BENCHMARK(BM_ModifiedEnergy)->Arg(128)->Arg(256);

void BM_EnergyIncrement(benchmark::State& state) {
  const Field u = rough(2, static_cast<int>(state.range(0)));
  const NlsModel model = NlsModel::single(2, 4.0);
  for (auto _ : state) benchmark::DoNotOptimize(energy_increment_direct(u, model, {8.0, 0.8}));
}
BENCHMARK(BM_EnergyIncrement)->Arg(128);

void BM_MorawetzRatio(benchmark::State& state) {
  const GridSpec g(2, 64, 16.0);
  const TimeSeries series = simulate(gaussian_profile(g, 1.0, 1.0), NlsModel::single(2, 4.0), {0.2, 1e-3, 1});
  for (auto _ : state) benchmark::DoNotOptimize(morawetz_ratio(series, MorawetzVariant::classical_L4L8));
}
BENCHMARK(BM_MorawetzRatio);

}  // namespace

BENCHMARK_MAIN();
