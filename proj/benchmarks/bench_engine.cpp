#include <benchmark/benchmark.h>

#include "cspec/engine.hpp"
#include "cspec/signals.hpp"

namespace {

cspec::SymbolicSequence pink_symbols(std::size_t n) {
  return cspec::quantize(cspec::gen_pink(n, 1), 8);
}

cspec::SymbolicSequence uniform_symbols(std::size_t n) {
  return cspec::quantize(cspec::gen_uniform(n, 1), 8);
}

void BM_SpectrumIndexedPink(benchmark::State& state) {
  const auto seq = pink_symbols(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(cspec::run_spectrum(seq));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SpectrumIndexedPink)->RangeMultiplier(4)->Range(1 << 10, 1 << 20)->Unit(benchmark::kMillisecond)->Complexity();

void BM_SpectrumIndexedUniform(benchmark::State& state) {
  const auto seq = uniform_symbols(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(cspec::run_spectrum(seq));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SpectrumIndexedUniform)->RangeMultiplier(4)->Range(1 << 10, 1 << 18)->Unit(benchmark::kMillisecond)->Complexity();

// Full rescan per substitution; kept small because it grows roughly quadratically.
void BM_SpectrumRescanPink(benchmark::State& state) {
  const auto seq = pink_symbols(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(cspec::run_spectrum_rescan(seq));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SpectrumRescanPink)->RangeMultiplier(2)->Range(1 << 10, 1 << 14)->Unit(benchmark::kMillisecond)->Complexity();

void BM_EtcLogistic(benchmark::State& state) {
  const auto seq = cspec::quantize(cspec::gen_logistic(3.9, 0.1, static_cast<std::size_t>(state.range(0))), 8);
  for (auto _ : state) benchmark::DoNotOptimize(cspec::run_etc(seq));
}
BENCHMARK(BM_EtcLogistic)->Arg(2000)->Arg(1 << 16)->Unit(benchmark::kMillisecond);

}  // namespace
