#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "rcsim/types.hpp"

namespace rcsim {

// Piecewise-constant reference f_r[t]. Pieces are left-closed: the value of
// the latest breakpoint <= t applies.
class LeaderSpec {
 public:
  struct Breakpoint {
    Step from;
    double value;
    friend bool operator==(const Breakpoint&, const Breakpoint&) = default;
  };

  explicit LeaderSpec(std::vector<Breakpoint> breakpoints);
  static LeaderSpec constant(double value, Step from = 0) { return LeaderSpec({{from, value}}); }

  double value(Step t) const;
  const std::vector<Breakpoint>& breakpoints() const noexcept { return breakpoints_; }

  // True iff f_r takes one value on [first, last].
  bool is_constant_on(Step first, Step last) const;

  friend bool operator==(const LeaderSpec&, const LeaderSpec&) = default;

 private:
  std::vector<Breakpoint> breakpoints_;
};

// Leader update x_l[t+1] = f_r[t].
inline double leader_value(const LeaderSpec& spec, Step t) { return spec.value(t); }

struct ValueItem {
  AgentId sender;
  double value;
  friend bool operator==(const ValueItem&, const ValueItem&) = default;
};

// Ascending by value, ties by sender id.
using SortedValueList = std::vector<ValueItem>;

// Latest value and receipt step per sender. Entries older than the window are
// kept in storage and masked at query time.
class ValueBuffer {
 public:
  struct Entry {
    Step received;
    double value;
  };

  ValueBuffer(Step window, Step t0);

  Step window() const noexcept { return window_; }
  Step t0() const noexcept { return t0_; }
  // T' = min(T, t - t0).
  Step effective_window(Step t) const;

  void record(AgentId sender, Step t, double value);
  // Entries with receipt step in [t - T', t].
  std::vector<std::pair<AgentId, Entry>> visible(Step t) const;
  const std::map<AgentId, Entry>& entries() const noexcept { return entries_; }

 private:
  Step window_;
  Step t0_;
  std::map<AgentId, Entry> entries_;
};

ValueBuffer record_receive(ValueBuffer buffer, AgentId sender, Step t, double value);

// Omega_i[t]: the visible buffer entries plus the owner's current state.
SortedValueList snapshot_omega(const ValueBuffer& buffer, AgentId self_id, double self_x, Step t);

struct FilterResult {
  SortedValueList kept;
  AgentSet removed;
};

// MSR trimming: drops up to F values strictly above self_x and up to F
// strictly below it. Among equal boundary values, higher sender ids go first.
FilterResult msr_filter(const SortedValueList& omega, double self_x, int F);

enum class WeightRule {
  uniform,    // 1 / |kept|
  self_half,  // owner keeps 1/2, the rest share 1/2 equally
};

// Smallest weight the rule can ever assign when at most n agents participate.
double weight_lower_bound(WeightRule rule, int n);

// Convex weights over `kept` in list order.
std::vector<double> compute_weights(WeightRule rule, const SortedValueList& kept, AgentId self_id);

struct UpdateOutcome {
  Step step;
  double next_x;
  double min_weight;
  AgentSet removed;
  SortedValueList kept;
};

struct FollowerState {
  AgentId id;
  double x;
  ValueBuffer buffer;
  int F = 0;
  WeightRule weight_rule = WeightRule::uniform;
  double alpha = 0.0;
  std::optional<UpdateOutcome> last_update;
};

// Pure SW-MSR step from a frozen state; does not touch `state`.
UpdateOutcome compute_update(const FollowerState& state, Step t);

// Applies compute_update, stores the outcome and returns x[t+1].
double swmsr_update(FollowerState& state, Step t);

// Smallest weight used by the update executed at step t.
double min_weight(const FollowerState& state, Step t);

}  // namespace rcsim
