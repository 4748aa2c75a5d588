#pragma once

#include <cstddef>
#include <vector>

#include "rcsim/types.hpp"

namespace rcsim {

// Static simple digraph over agents 1..n stored as in-neighbor sets.
// An edge (i, j) means agent i sends to agent j, so i is in in_neighbors(j).
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(int n);

  int size() const noexcept { return n_; }

  // Adds i -> j. Self-loops and out-of-range ids are rejected.
  void add_edge(AgentId from, AgentId to);
  bool has_edge(AgentId from, AgentId to) const;

  const AgentSet& in_neighbors(AgentId i) const;
  AgentSet out_neighbors(AgentId i) const;
  // J_i: in-neighbors plus i itself.
  AgentSet inclusive_neighbors(AgentId i) const;

  std::size_t edge_count() const noexcept;

  // Edgewise union; both graphs must share n.
  Digraph& merge(const Digraph& other);

  bool contains(AgentId i) const noexcept { return i >= 1 && i <= n_; }
  void require_agent(AgentId i) const;

  friend bool operator==(const Digraph&, const Digraph&) = default;

 private:
  int n_ = 0;
  std::vector<AgentSet> in_;
};

// Periodic schedule: graphs[floor((t - t0) / dwell) mod graphs.size()] is
// active at step t >= t0.
class GraphSchedule {
 public:
  GraphSchedule(std::vector<Digraph> graphs, Step dwell, Step t0 = 0);

  int agent_count() const noexcept { return graphs_.front().size(); }
  Step dwell() const noexcept { return dwell_; }
  Step t0() const noexcept { return t0_; }
  const std::vector<Digraph>& graphs() const noexcept { return graphs_; }

  // Steps after which the active-graph sequence repeats.
  Step period() const noexcept { return dwell_ * static_cast<Step>(graphs_.size()); }

  std::size_t active_index(Step t) const;
  const Digraph& active(Step t) const;

  // Same graphs and dwell, started at a different step.
  GraphSchedule shifted_to(Step t0) const;

  friend bool operator==(const GraphSchedule&, const GraphSchedule&) = default;

 private:
  std::vector<Digraph> graphs_;
  Step dwell_;
  Step t0_;
};

// D^T[t]: union of the active graphs over [max(t0, t - T), t].
struct WindowedUnion {
  GraphSchedule base;
  Step window = 0;
};

AgentSet in_neighbors_at(const GraphSchedule& schedule, AgentId i, Step t);

Digraph union_digraph(const WindowedUnion& wu, Step t);

}  // namespace rcsim
