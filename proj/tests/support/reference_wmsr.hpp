#pragma once

// Single-window MSR reference used to cross-check the engine with T = 0.
// Written directly from the algorithm steps over one round's received values;
// shares no code with the engine beyond scenario and behavior types.

#include <algorithm>
#include <vector>

#include "rcsim/sim.hpp"

namespace rcsim::testing {

struct ReferenceRun {
  std::vector<std::vector<double>> states;  // states[t - t0][i - 1]
};

inline ReferenceRun reference_wmsr(const ScenarioConfig& cfg, const std::vector<double>& initial) {
  const Digraph& g = cfg.schedule.graphs().front();
  const int n = g.size();
  const auto& cast = cfg.cast;
  ReferenceRun out;
  std::vector<double> x = initial;

  for (Step t = cfg.schedule.t0(); t <= cfg.horizon; ++t) {
    out.states.push_back(x);
    std::vector<double> next(x.size());
    for (AgentId i = 1; i <= n; ++i) {
      const auto idx = static_cast<std::size_t>(i - 1);
      if (cast.adversaries().contains(i)) {
        next[idx] = cast.adversaries().at(i).true_state(t + 1, i);
        continue;
      }
      if (cast.leaders().contains(i)) {
        next[idx] = cfg.reference.value(t);
        continue;
      }
      struct Item {
        double v;
        AgentId id;
        bool removed;
      };
      std::vector<Item> items{{x[idx], i, false}};
      for (AgentId j : g.in_neighbors(i)) {
        const double v = cast.adversaries().contains(j) ? cast.adversaries().at(j).sent_value(t, i)
                                                        : x[static_cast<std::size_t>(j - 1)];
        items.push_back({v, j, false});
      }
      std::sort(items.begin(), items.end(),
                [](const Item& a, const Item& b) { return a.v < b.v || (a.v == b.v && a.id < b.id); });
      const double own = x[idx];
      // Step 2: drop the F largest strictly-greater values (or all of them).
      int dropped = 0;
      for (auto it = items.rbegin(); it != items.rend() && dropped < cfg.F; ++it) {
        if (it->v > own) {
          it->removed = true;
          ++dropped;
        }
      }
      // Step 3: same for strictly smaller values.
      dropped = 0;
      for (auto it = items.begin(); it != items.end() && dropped < cfg.F; ++it) {
        if (it->v < own) {
          it->removed = true;
          ++dropped;
        }
      }
      // Step 4: uniform weights over what is left.
      double sum = 0.0;
      double lo = 0.0;
      double hi = 0.0;
      int kept = 0;
      for (const auto& item : items) {
        if (item.removed) continue;
        if (kept == 0) lo = item.v;
        hi = item.v;
        sum += item.v;
        ++kept;
      }
      next[idx] = std::clamp(sum / kept, lo, hi);
    }
    x = std::move(next);
  }
  return out;
}

}  // namespace rcsim::testing
