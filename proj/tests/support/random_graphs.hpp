#pragma once

#include <random>

#include "rcsim/graph.hpp"

namespace rcsim::testing {

// Erdos-Renyi style digraph on n agents without self-loops.
inline Digraph random_digraph(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution edge(p);
  Digraph d(n);
  for (AgentId i = 1; i <= n; ++i) {
    for (AgentId j = 1; j <= n; ++j) {
      if (i != j && edge(rng)) d.add_edge(i, j);
    }
  }
  return d;
}

// Uniformly random nonempty subset of 1..n.
inline AgentSet random_nonempty_subset(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<std::uint32_t> pick(1, (1U << n) - 1);
  const auto mask = pick(rng);
  AgentSet s;
  for (int b = 0; b < n; ++b) {
    if (mask & (1U << b)) s.insert(b + 1);
  }
  return s;
}

}  // namespace rcsim::testing
