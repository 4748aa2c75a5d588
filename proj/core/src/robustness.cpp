#include "rcsim/robustness.hpp"

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

namespace rcsim {
namespace {

void require_subset(const Digraph& d, const AgentSet& s, const char* what) {
  for (AgentId i : s) {
    if (!d.contains(i)) {
      throw DomainError(std::string(what) + " contains agent " + std::to_string(i) + " outside [1, " +
                        std::to_string(d.size()) + "]");
    }
  }
}

void require_nonnegative(int r) {
  if (r < 0) throw DomainError("r must be >= 0, got " + std::to_string(r));
}

}  // namespace

bool is_r_reachable(const Digraph& d, const AgentSet& set, int r) {
  if (set.empty()) throw DomainError("r-reachability is defined for nonempty sets only");
  require_subset(d, set, "set");
  require_nonnegative(r);
  for (AgentId i : set) {
    int outside = 0;
    for (AgentId j : d.in_neighbors(i)) {
      if (!set.contains(j)) ++outside;
    }
    if (outside >= r) return true;
  }
  return false;
}

bool is_strongly_r_robust_wrt(const Digraph& d, const AgentSet& source, int r) {
  if (source.empty()) throw DomainError("strong robustness needs a nonempty source set");
  require_subset(d, source, "source set");
  require_nonnegative(r);

  const int n = d.size();
  std::vector<bool> reached(static_cast<std::size_t>(n) + 1, false);
  for (AgentId i : source) reached[static_cast<std::size_t>(i)] = true;
  auto count = static_cast<int>(source.size());

  bool grew = true;
  while (grew && count < n) {
    grew = false;
    for (AgentId i = 1; i <= n; ++i) {
      if (reached[static_cast<std::size_t>(i)]) continue;
      const auto& in = d.in_neighbors(i);
      const auto hits = std::count_if(in.begin(), in.end(),
                                      [&](AgentId j) { return reached[static_cast<std::size_t>(j)]; });
      if (hits >= r) {
        reached[static_cast<std::size_t>(i)] = true;
        ++count;
        grew = true;
      }
    }
  }
  return count == n;
}

bool brute_force_strong_robustness(const Digraph& d, const AgentSet& source, int r) {
  if (d.size() > kBruteForceMaxAgents) {
    throw DomainError("brute force limited to n <= " + std::to_string(kBruteForceMaxAgents) + ", got n=" +
                      std::to_string(d.size()));
  }
  if (source.empty()) throw DomainError("strong robustness needs a nonempty source set");
  require_subset(d, source, "source set");
  require_nonnegative(r);

  std::vector<AgentId> rest;
  for (AgentId i = 1; i <= d.size(); ++i) {
    if (!source.contains(i)) rest.push_back(i);
  }
  const std::uint32_t subsets = 1U << rest.size();
  for (std::uint32_t mask = 1; mask < subsets; ++mask) {
    AgentSet c;
    for (std::size_t b = 0; b < rest.size(); ++b) {
      if (mask & (1U << b)) c.insert(rest[b]);
    }
    if (!is_r_reachable(d, c, r)) return false;
  }
  return true;
}

bool is_strongly_Tt0r_robust_wrt(const WindowedUnion& wu, const AgentSet& source, int r, Step horizon) {
  const Step first = wu.base.t0() + wu.window;
  if (horizon < first) {
    throw DomainError("horizon " + std::to_string(horizon) + " precedes t0 + T = " + std::to_string(first));
  }
  const Step last = std::min(horizon, first + wu.base.period() - 1);
  for (Step t = first; t <= last; ++t) {
    if (!is_strongly_r_robust_wrt(union_digraph(wu, t), source, r)) return false;
  }
  return true;
}

bool is_F_local(const GraphSchedule& schedule, const AgentSet& set, int F, Step t0, Step horizon) {
  if (horizon < t0) throw DomainError("horizon precedes t0");
  if (t0 < schedule.t0()) throw DomainError("t0 precedes the schedule start");
  if (set.empty()) return true;

  const auto& graphs = schedule.graphs();
  std::vector<bool> checked(graphs.size(), false);
  std::size_t remaining = graphs.size();
  // Visit each dwell block once until every distinct graph has been seen.
  for (Step t = t0; t <= horizon && remaining > 0;) {
    const std::size_t idx = schedule.active_index(t);
    if (!checked[idx]) {
      checked[idx] = true;
      --remaining;
      const Digraph& g = graphs[idx];
      require_subset(g, set, "set");
      for (AgentId i = 1; i <= g.size(); ++i) {
        if (set.contains(i)) continue;
        const auto& in = g.in_neighbors(i);
        const auto hits = std::count_if(in.begin(), in.end(), [&](AgentId j) { return set.contains(j); });
        if (hits > F) return false;
      }
    }
    t = schedule.t0() + ((t - schedule.t0()) / schedule.dwell() + 1) * schedule.dwell();
  }
  return true;
}

}  // namespace rcsim
