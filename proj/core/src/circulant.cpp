#include "rcsim/circulant.hpp"

#include <string>

namespace rcsim {
namespace {

void require_circulant_params(int n, int k) {
  if (n < 2 || k < 1 || k >= n - 1) {
    throw DomainError("k-circulant needs n >= 2 and 1 <= k < n-1, got n=" + std::to_string(n) +
                      " k=" + std::to_string(k));
  }
}

}  // namespace

AgentId wrap_agent(long long value, int n) {
  const long long m = ((value - 1) % n + n) % n;
  return static_cast<AgentId>(m + 1);
}

Digraph make_circulant(int n, const std::vector<int>& offsets) {
  Digraph d(n);
  for (int a : offsets) {
    if (a <= 0 || a >= n) {
      throw DomainError("circulant offset " + std::to_string(a) + " outside (0, " + std::to_string(n) + ")");
    }
    for (AgentId i = 1; i <= n; ++i) d.add_edge(i, wrap_agent(static_cast<long long>(i) + a, n));
  }
  return d;
}

Digraph make_k_circulant(int n, int k) {
  require_circulant_params(n, k);
  std::vector<int> offsets;
  for (int a = 1; a <= k; ++a) offsets.push_back(a);
  return make_circulant(n, offsets);
}

OffsetPartition consecutive_partition(int k, int classes) {
  if (k < 1 || classes < 1 || classes > k) {
    throw DomainError("cannot split " + std::to_string(k) + " offsets into " + std::to_string(classes) +
                      " nonempty classes");
  }
  OffsetPartition out;
  int next = 1;
  for (int c = 0; c < classes; ++c) {
    const int len = k / classes + (c < k % classes ? 1 : 0);
    std::vector<int> cls;
    for (int j = 0; j < len; ++j) cls.push_back(next++);
    out.push_back(std::move(cls));
  }
  return out;
}

void validate_partition(const OffsetPartition& partition, int k) {
  if (partition.empty()) throw DomainError("offset partition is empty");
  std::vector<int> seen(static_cast<std::size_t>(k) + 1, 0);
  for (const auto& cls : partition) {
    if (cls.empty()) throw DomainError("offset partition has an empty class");
    for (int a : cls) {
      if (a < 1 || a > k) {
        throw DomainError("offset " + std::to_string(a) + " outside {1.." + std::to_string(k) + "}");
      }
      if (seen[static_cast<std::size_t>(a)]++) {
        throw DomainError("offset " + std::to_string(a) + " appears in more than one class");
      }
    }
  }
  for (int a = 1; a <= k; ++a) {
    if (!seen[static_cast<std::size_t>(a)]) {
      throw DomainError("offset partition does not cover offset " + std::to_string(a));
    }
  }
}

GraphSchedule make_partitioned_circulant_schedule(int n, int k, const OffsetPartition& partition, Step dwell,
                                                  Step t0) {
  require_circulant_params(n, k);
  validate_partition(partition, k);
  std::vector<Digraph> graphs;
  graphs.reserve(partition.size());
  for (const auto& cls : partition) graphs.push_back(make_circulant(n, cls));
  return GraphSchedule(std::move(graphs), dwell, t0);
}

AgentSet ConsecutiveBlock::members(int n) const {
  AgentSet out;
  for (int j = 0; j < length; ++j) out.insert(wrap_agent(static_cast<long long>(start) + j, n));
  return out;
}

std::optional<ConsecutiveBlock> k_circulant_witness(int n, int k, const AgentSet& leaders, int r) {
  require_circulant_params(n, k);
  if (leaders.empty()) throw DomainError("leader set must be nonempty");
  for (AgentId l : leaders) {
    if (l < 1 || l > n) throw DomainError("leader id " + std::to_string(l) + " outside [1, n]");
  }
  for (int length = 1; length <= k; ++length) {
    for (AgentId start = 1; start <= n; ++start) {
      int hits = 0;
      for (int j = 0; j < length; ++j) {
        if (leaders.contains(wrap_agent(static_cast<long long>(start) + j, n))) ++hits;
      }
      if (hits >= r) return ConsecutiveBlock{start, length};
    }
  }
  return std::nullopt;
}

}  // namespace rcsim
