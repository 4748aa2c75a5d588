#include <benchmark/benchmark.h>

#include "rcsim/presets.hpp"
#include "rcsim/sim.hpp"

namespace {

using namespace rcsim;

void BM_RunPreset(benchmark::State& state, const char* name) {
  const auto cfg = load_preset(name);
  for (auto _ : state) benchmark::DoNotOptimize(run(cfg).records().size());
  state.SetItemsProcessed(state.iterations() * (cfg.horizon + 1));
}
BENCHMARK_CAPTURE(BM_RunPreset, sim1, "sim1")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_RunPreset, sim2, "sim2")->Unit(benchmark::kMillisecond);

void BM_VerifyTrace(benchmark::State& state) {
  const auto trace = run(load_preset("sim1"));
  for (auto _ : state) benchmark::DoNotOptimize(verify_trace(trace).theorem1.size());
}
BENCHMARK(BM_VerifyTrace)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
