#include "rcsim/graph.hpp"

#include <algorithm>
#include <string>

namespace rcsim {

Digraph::Digraph(int n) : n_(n), in_(n > 0 ? static_cast<std::size_t>(n) : 0U) {
  if (n < 1) throw DomainError("digraph needs at least one agent, got n=" + std::to_string(n));
}

void Digraph::require_agent(AgentId i) const {
  if (!contains(i)) {
    throw DomainError("agent id " + std::to_string(i) + " outside [1, " + std::to_string(n_) + "]");
  }
}

void Digraph::add_edge(AgentId from, AgentId to) {
  require_agent(from);
  require_agent(to);
  if (from == to) throw DomainError("self-loop on agent " + std::to_string(from));
  in_[static_cast<std::size_t>(to - 1)].insert(from);
}

bool Digraph::has_edge(AgentId from, AgentId to) const {
  require_agent(to);
  return in_[static_cast<std::size_t>(to - 1)].contains(from);
}

const AgentSet& Digraph::in_neighbors(AgentId i) const {
  require_agent(i);
  return in_[static_cast<std::size_t>(i - 1)];
}

AgentSet Digraph::out_neighbors(AgentId i) const {
  require_agent(i);
  AgentSet out;
  for (AgentId j = 1; j <= n_; ++j) {
    if (in_[static_cast<std::size_t>(j - 1)].contains(i)) out.insert(j);
  }
  return out;
}

AgentSet Digraph::inclusive_neighbors(AgentId i) const {
  AgentSet j = in_neighbors(i);
  j.insert(i);
  return j;
}

std::size_t Digraph::edge_count() const noexcept {
  std::size_t total = 0;
  for (const auto& s : in_) total += s.size();
  return total;
}

Digraph& Digraph::merge(const Digraph& other) {
  if (other.n_ != n_) {
    throw DomainError("cannot merge digraphs of different sizes (" + std::to_string(n_) + " vs " +
                      std::to_string(other.n_) + ")");
  }
  for (std::size_t k = 0; k < in_.size(); ++k) in_[k].insert(other.in_[k].begin(), other.in_[k].end());
  return *this;
}

GraphSchedule::GraphSchedule(std::vector<Digraph> graphs, Step dwell, Step t0)
    : graphs_(std::move(graphs)), dwell_(dwell), t0_(t0) {
  if (graphs_.empty()) throw DomainError("schedule needs at least one graph");
  if (dwell_ < 1) throw DomainError("schedule dwell must be >= 1, got " + std::to_string(dwell_));
  const int n = graphs_.front().size();
  for (const auto& g : graphs_) {
    if (g.size() != n) throw DomainError("all scheduled graphs must share the same agent count");
  }
}

std::size_t GraphSchedule::active_index(Step t) const {
  if (t < t0_) {
    throw DomainError("step " + std::to_string(t) + " precedes schedule start t0=" + std::to_string(t0_));
  }
  return static_cast<std::size_t>(((t - t0_) / dwell_) % static_cast<Step>(graphs_.size()));
}

const Digraph& GraphSchedule::active(Step t) const { return graphs_[active_index(t)]; }

GraphSchedule GraphSchedule::shifted_to(Step t0) const { return GraphSchedule(graphs_, dwell_, t0); }

AgentSet in_neighbors_at(const GraphSchedule& schedule, AgentId i, Step t) {
  return schedule.active(t).in_neighbors(i);
}

Digraph union_digraph(const WindowedUnion& wu, Step t) {
  const auto& s = wu.base;
  if (wu.window < 0) throw DomainError("window length must be >= 0");
  const std::size_t first = s.active_index(t);
  Digraph out = s.graphs()[first];
  const Step start = std::max(s.t0(), t - wu.window);

  // Walk dwell blocks backwards; every graph index is visited at most once.
  std::vector<bool> seen(s.graphs().size(), false);
  seen[first] = true;
  std::size_t remaining = s.graphs().size() - 1;
  Step cursor = t;
  while (remaining > 0) {
    const Step block_start = s.t0() + ((cursor - s.t0()) / s.dwell()) * s.dwell();
    cursor = block_start - 1;
    if (cursor < start) break;
    const std::size_t idx = s.active_index(cursor);
    if (!seen[idx]) {
      seen[idx] = true;
      --remaining;
      out.merge(s.graphs()[idx]);
    }
  }
  return out;
}

}  // namespace rcsim
