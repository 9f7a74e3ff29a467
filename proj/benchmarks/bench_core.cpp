#include <benchmark/benchmark.h>

#include "fovisc/fitting.hpp"
#include "fovisc/impedance.hpp"
#include "fovisc/passivity.hpp"
#include "fovisc/simloop.hpp"

namespace {

const fovisc::FoSlsParams kTable3{-2.89, 5.70, 5.89, 0.203};

void BM_KernelBuild(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(fovisc::GLKernel(0.5, n, 1e-3));
  state.SetComplexityN(n);
}
BENCHMARK(BM_KernelBuild)->RangeMultiplier(10)->Range(10, 100000)->Complexity();

void BM_FreqSweep(benchmark::State& state) {
  const fovisc::GLKernel k(0.203, static_cast<int>(state.range(0)), 1e-3);
  for (auto _ : state)
    benchmark::DoNotOptimize(
        fovisc::effective_sweep(kTable3, k, fovisc::ImpedanceForm::finite_n, 1024));
}
BENCHMARK(BM_FreqSweep)->Arg(101)->Arg(1001)->Arg(10001);

void BM_ForceStep(benchmark::State& state) {
  const fovisc::GLKernel k(0.203, static_cast<int>(state.range(0)), 1e-3);
  fovisc::DiscreteVE ve(kTable3, k);
  double x = 0.0;
  for (auto _ : state) {
    x += 1e-3;
    benchmark::DoNotOptimize(ve.force_step(x));
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_ForceStep)->Arg(101)->Arg(1001)->Arg(10001);

void BM_MaxPassivity(benchmark::State& state) {
  const fovisc::GLKernel k(0.5, static_cast<int>(state.range(0)), 1e-3);
  const fovisc::FoSlsParams p{0.0, 1.0, 1.0, 0.5};
  for (auto _ : state) benchmark::DoNotOptimize(fovisc::max_passivity(p, k));
}
BENCHMARK(BM_MaxPassivity)->Arg(100)->Arg(101)->Arg(1001)->Unit(benchmark::kMillisecond);

void BM_ClosedFormBound(benchmark::State& state) {
  const fovisc::GLKernel k(0.5, 101, 1e-3);
  const fovisc::FoSlsParams p{0.0, 1.0, 1.0, 0.5};
  for (auto _ : state) benchmark::DoNotOptimize(fovisc::bound_closed_form(p, k));
}
BENCHMARK(BM_ClosedFormBound);

void BM_ImpulseRun(benchmark::State& state) {
  const fovisc::GLKernel k(0.5, 101, 1e-3);
  const fovisc::PlantParams plant;
  for (auto _ : state) {
    fovisc::DiscreteVE ve({0.0, 2.0, 100.0, 0.5}, k);
    benchmark::DoNotOptimize(fovisc::simulate(plant, ve, fovisc::Impulse{0.01}, 10.0));
  }
}
BENCHMARK(BM_ImpulseRun)->Unit(benchmark::kMillisecond);

void BM_FitObjectiveData(benchmark::State& state) {
  const fovisc::GLKernel k(0.203, 101, 1e-3);
  const auto d = fovisc::synth_experiment(kTable3, k, fovisc::Protocol::creep());
  for (auto _ : state) benchmark::DoNotOptimize(fovisc::predict(kTable3, k, d));
}
BENCHMARK(BM_FitObjectiveData)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
