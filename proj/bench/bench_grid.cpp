#include <benchmark/benchmark.h>

#include "husimi/grid.hpp"

namespace {

husimi::OscillatorParams params(double a) {
  husimi::OscillatorParams p;
  p.a = a;
  p.g = 1.0;
  return p;
}

const husimi::GridSpec kGrid{-3.0, 3.0, -3.0, 3.0, 41, 41};

void BM_GridSerial(benchmark::State& state) {
  const auto p = params(static_cast<double>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(husimi::husimi_grid_serial(husimi::ModelKind::Semiconfined, 1, kGrid, p));
}

void BM_GridParallel(benchmark::State& state) {
  const auto p = params(static_cast<double>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(husimi::husimi_grid(husimi::ModelKind::Semiconfined, 1, kGrid, p));
}

}  // namespace

BENCHMARK(BM_GridSerial)->Arg(2)->Arg(12)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_GridParallel)->Arg(2)->Arg(12)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK_MAIN();
