#include <benchmark/benchmark.h>

#include "shg/shg.hpp"

namespace {

const shg::Params kUnit = shg::Params::reduced(1.0, 1.0, 14.4);

void BM_Derivative(benchmark::State& state) {
  const auto grid = shg::Grid::make(20.0, static_cast<std::size_t>(state.range(0)));
  const auto pulse = shg::explicit_pulse(grid);
  for (auto _ : state) benchmark::DoNotOptimize(shg::second_derivative(pulse.f));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Derivative)->RangeMultiplier(2)->Range(256, 8192)->Complexity();

void BM_Gradients(benchmark::State& state) {
  const auto grid = shg::Grid::make(20.0, static_cast<std::size_t>(state.range(0)));
  const auto pulse = shg::explicit_pulse(grid);
  for (auto _ : state) benchmark::DoNotOptimize(shg::gradients(pulse, kUnit));
}
BENCHMARK(BM_Gradients)->Arg(512)->Arg(2048);

void BM_Minimize(benchmark::State& state) {
  const auto grid = shg::Grid::make(20.0, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(shg::minimize(kUnit, grid));
}
BENCHMARK(BM_Minimize)->Arg(256)->Arg(512)->Unit(benchmark::kMillisecond);

void BM_Petviashvili(benchmark::State& state) {
  const auto grid = shg::Grid::make(20.0, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(shg::fixed_point_solve(kUnit, grid));
}
BENCHMARK(BM_Petviashvili)->Arg(256)->Arg(512)->Unit(benchmark::kMillisecond);

void BM_SplitStep(benchmark::State& state) {
  const auto grid = shg::Grid::make(20.0, static_cast<std::size_t>(state.range(0)));
  const auto pulse = shg::explicit_pulse(grid);
  const shg::Params p = shg::Params::reduced(1.0, 1.0, 14.4, 1.0, 0.5);
  const shg::SplitStepPropagator prop(grid, p, 1e-3);
  shg::WaveState s(shg::to_complex(pulse.f), shg::to_complex(pulse.g));
  for (auto _ : state) s = prop.advance(s);
}
BENCHMARK(BM_SplitStep)->Arg(512)->Arg(2048);

}  // namespace
