#pragma once

#include "rcsim/graph.hpp"

namespace rcsim {

// True iff some member of `set` has at least r in-neighbors outside it.
bool is_r_reachable(const Digraph& d, const AgentSet& set, int r);

// Strong r-robustness w.r.t. `source`: every nonempty C within V \ source is
// r-reachable. Decided by propagation: grow R from `source`, absorbing any
// agent with at least r in-neighbors already in R; robust iff R reaches V.
bool is_strongly_r_robust_wrt(const Digraph& d, const AgentSet& source, int r);

// Largest n accepted by brute_force_strong_robustness.
inline constexpr int kBruteForceMaxAgents = 20;

// Enumerates every nonempty subset of V \ source and checks r-reachability.
// Exponential; guarded by kBruteForceMaxAgents.
bool brute_force_strong_robustness(const Digraph& d, const AgentSet& source, int r);

// Strong (T, t0, r)-robustness w.r.t. `source`, checked for every
// t in [t0 + T, horizon]. The union digraph is periodic in t once the window
// no longer truncates at t0, so at most one schedule period is examined.
bool is_strongly_Tt0r_robust_wrt(const WindowedUnion& wu, const AgentSet& source, int r, Step horizon);

// F-local: every agent outside `set` has at most F in-neighbors in `set` in
// each active graph over [t0, horizon].
bool is_F_local(const GraphSchedule& schedule, const AgentSet& set, int F, Step t0, Step horizon);

}  // namespace rcsim
