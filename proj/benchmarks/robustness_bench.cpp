#include <benchmark/benchmark.h>

#include <random>

#include "rcsim/circulant.hpp"
#include "rcsim/robustness.hpp"

namespace {

using namespace rcsim;

Digraph random_digraph(int n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution edge(p);
  Digraph d(n);
  for (AgentId i = 1; i <= n; ++i) {
    for (AgentId j = 1; j <= n; ++j) {
      if (i != j && edge(rng)) d.add_edge(i, j);
    }
  }
  return d;
}

void BM_PropagationChecker(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto d = random_digraph(n, 0.5, 7);
  const AgentSet source{1, 2};
  for (auto _ : state) benchmark::DoNotOptimize(is_strongly_r_robust_wrt(d, source, 3));
}
BENCHMARK(BM_PropagationChecker)->Arg(8)->Arg(12)->Arg(16)->Arg(64)->Arg(256);

void BM_BruteForceChecker(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto d = random_digraph(n, 0.5, 7);
  const AgentSet source{1, 2};
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_strong_robustness(d, source, 3));
}
BENCHMARK(BM_BruteForceChecker)->Arg(8)->Arg(12)->Arg(16);

void BM_WindowedCertification(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto schedule = make_partitioned_circulant_schedule(n, 7, {{1, 2, 3}, {4, 5}, {6, 7}}, 10);
  const WindowedUnion wu{schedule, 30};
  const AgentSet leaders{1, 2, 3, 4, 5, 6, 7};
  for (auto _ : state) benchmark::DoNotOptimize(is_strongly_Tt0r_robust_wrt(wu, leaders, 7, 1000));
}
BENCHMARK(BM_WindowedCertification)->Arg(30)->Arg(120);

}  // namespace
