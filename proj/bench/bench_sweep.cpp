// Serial vs OpenMP sweep over a small q x beta grid of gantry runs.
#include <benchmark/benchmark.h>

#include <vector>

#include "gista/app/commands.hpp"

using namespace gista;
using namespace gista::app;

namespace {

std::vector<SimConfig> grid(int points) {
  std::vector<SimConfig> out;
  for (int i = 0; i < points; ++i) {
    SimConfig c;
    c.n_iterations = 2;
    const double q = 1.0 + 0.25 * (i % 4);
    const double beta = 0.05 + 0.025 * (i / 4);
    for (auto& a : c.controllers) a.ilc = IlcParams(q, beta, 1e-6);
    out.push_back(c);
  }
  return out;
}

void BM_SweepSerial(benchmark::State& state) {
  const auto cfgs = grid(static_cast<int>(state.range(0)));
  const PointFn fn = [&](std::size_t i) { return evaluate_point(cfgs[i]); };
  for (auto _ : state) benchmark::DoNotOptimize(sweep_serial(cfgs.size(), fn));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_SweepParallel(benchmark::State& state) {
  const auto cfgs = grid(static_cast<int>(state.range(0)));
  const PointFn fn = [&](std::size_t i) { return evaluate_point(cfgs[i]); };
  for (auto _ : state) {
    benchmark::DoNotOptimize(sweep_parallel(cfgs.size(), static_cast<int>(state.range(1)), fn));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK(BM_SweepSerial)->Arg(8)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_SweepParallel)
    ->Args({8, 2})
    ->Args({8, 4})
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();

BENCHMARK_MAIN();
