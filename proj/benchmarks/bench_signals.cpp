#include <benchmark/benchmark.h>

#include "cspec/analysis.hpp"
#include "cspec/signals.hpp"
#include "cspec/symbolic.hpp"

namespace {

void BM_GenPink(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cspec::gen_pink(n, 7));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_GenPink)->Arg(1 << 12)->Arg(1 << 16)->Arg(1000000);

void BM_GenUniform(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cspec::gen_uniform(n, 7));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_GenUniform)->Arg(1 << 16);

void BM_GenLogistic(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cspec::gen_logistic(3.9, 0.1, n));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_GenLogistic)->Arg(1 << 16);

void BM_Quantize(benchmark::State& state) {
  const auto x = cspec::gen_pink(static_cast<std::size_t>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(cspec::quantize(x, 8));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Quantize)->Arg(1 << 16);

void BM_Lyapunov(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(cspec::lyapunov_logistic(3.9, 0.1, 100000));
}
BENCHMARK(BM_Lyapunov);

void BM_Sweep(benchmark::State& state) {
  cspec::SweepParams p;
  p.threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cspec::bifurcation_sweep(p));
}
BENCHMARK(BM_Sweep)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace
