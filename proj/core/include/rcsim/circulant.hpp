#pragma once

#include <optional>
#include <vector>

#include "rcsim/graph.hpp"

namespace rcsim {

// Maps an arbitrary integer onto the agent ring 1..n.
AgentId wrap_agent(long long value, int n);

// Circulant digraph C_n(a_1, ..., a_m): each i sends to i + a_j (mod n).
Digraph make_circulant(int n, const std::vector<int>& offsets);

// k-circulant digraph C_n(1, ..., k). Requires n >= 2 and 1 <= k < n - 1.
Digraph make_k_circulant(int n, int k);

using OffsetPartition = std::vector<std::vector<int>>;

// Splits {1..k} into `classes` consecutive runs, larger runs first
// (k = 7, classes = 3 gives {1,2,3}, {4,5}, {6,7}).
OffsetPartition consecutive_partition(int k, int classes);

// Throws DomainError unless `partition` covers {1..k} disjointly with
// nonempty classes.
void validate_partition(const OffsetPartition& partition, int k);

// One circulant per partition class, switched every `dwell` steps. The union
// over one period is C_n(1..k).
GraphSchedule make_partitioned_circulant_schedule(int n, int k, const OffsetPartition& partition, Step dwell,
                                                  Step t0 = 0);

// A cyclic run of consecutive agents {start, start+1, ..., start+length-1}.
struct ConsecutiveBlock {
  AgentId start = 1;
  int length = 0;

  AgentSet members(int n) const;
  friend bool operator==(const ConsecutiveBlock&, const ConsecutiveBlock&) = default;
};

// Finds a consecutive block P with |P| <= k and |P ∩ leaders| >= r, which
// certifies C_n(1..k) strongly r-robust w.r.t. leaders. Returns the shortest
// such block, ties broken by smallest start index.
std::optional<ConsecutiveBlock> k_circulant_witness(int n, int k, const AgentSet& leaders, int r);

}  // namespace rcsim
