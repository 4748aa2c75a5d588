#include "rcsim/protocol.hpp"

#include <algorithm>
#include <iterator>
#include <string>

namespace rcsim {

LeaderSpec::LeaderSpec(std::vector<Breakpoint> breakpoints) : breakpoints_(std::move(breakpoints)) {
  if (breakpoints_.empty()) throw DomainError("reference needs at least one breakpoint");
  for (std::size_t k = 1; k < breakpoints_.size(); ++k) {
    if (breakpoints_[k].from <= breakpoints_[k - 1].from) {
      throw DomainError("reference breakpoints must be strictly increasing");
    }
  }
}

double LeaderSpec::value(Step t) const {
  if (t < breakpoints_.front().from) {
    throw DomainError("step " + std::to_string(t) + " precedes the first reference breakpoint");
  }
  auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), t,
                             [](Step s, const Breakpoint& b) { return s < b.from; });
  return std::prev(it)->value;
}

bool LeaderSpec::is_constant_on(Step first, Step last) const {
  if (last < first) return true;
  const double v = value(first);
  for (const auto& b : breakpoints_) {
    if (b.from > first && b.from <= last && b.value != v) return false;
  }
  return true;
}

ValueBuffer::ValueBuffer(Step window, Step t0) : window_(window), t0_(t0) {
  if (window_ < 0) throw DomainError("window length must be >= 0");
}

Step ValueBuffer::effective_window(Step t) const {
  if (t < t0_) throw DomainError("step " + std::to_string(t) + " precedes t0=" + std::to_string(t0_));
  return std::min(window_, t - t0_);
}

void ValueBuffer::record(AgentId sender, Step t, double value) {
  if (t < t0_) throw DomainError("receipt step precedes t0");
  auto [it, inserted] = entries_.try_emplace(sender, Entry{t, value});
  if (!inserted && t >= it->second.received) it->second = Entry{t, value};
}

std::vector<std::pair<AgentId, ValueBuffer::Entry>> ValueBuffer::visible(Step t) const {
  const Step oldest = t - effective_window(t);
  std::vector<std::pair<AgentId, Entry>> out;
  for (const auto& [sender, e] : entries_) {
    if (e.received >= oldest && e.received <= t) out.emplace_back(sender, e);
  }
  return out;
}

ValueBuffer record_receive(ValueBuffer buffer, AgentId sender, Step t, double value) {
  buffer.record(sender, t, value);
  return buffer;
}

SortedValueList snapshot_omega(const ValueBuffer& buffer, AgentId self_id, double self_x, Step t) {
  SortedValueList omega;
  omega.push_back({self_id, self_x});
  for (const auto& [sender, e] : buffer.visible(t)) {
    if (sender != self_id) omega.push_back({sender, e.value});
  }
  std::sort(omega.begin(), omega.end(), [](const ValueItem& a, const ValueItem& b) {
    return a.value < b.value || (a.value == b.value && a.sender < b.sender);
  });
  return omega;
}

FilterResult msr_filter(const SortedValueList& omega, double self_x, int F) {
  if (F < 0) throw DomainError("F must be >= 0");
  std::vector<ValueItem> above;
  std::vector<ValueItem> below;
  for (const auto& item : omega) {
    if (item.value > self_x) above.push_back(item);
    if (item.value < self_x) below.push_back(item);
  }
  // Most extreme first; equal values drop the higher id first.
  std::sort(above.begin(), above.end(), [](const ValueItem& a, const ValueItem& b) {
    return a.value > b.value || (a.value == b.value && a.sender > b.sender);
  });
  std::sort(below.begin(), below.end(), [](const ValueItem& a, const ValueItem& b) {
    return a.value < b.value || (a.value == b.value && a.sender > b.sender);
  });

  FilterResult result;
  const auto take = static_cast<std::size_t>(F);
  for (std::size_t k = 0; k < std::min(take, above.size()); ++k) result.removed.insert(above[k].sender);
  for (std::size_t k = 0; k < std::min(take, below.size()); ++k) result.removed.insert(below[k].sender);
  for (const auto& item : omega) {
    if (!result.removed.contains(item.sender)) result.kept.push_back(item);
  }
  return result;
}

double weight_lower_bound(WeightRule rule, int n) {
  if (n < 1) throw DomainError("agent count must be >= 1");
  switch (rule) {
    case WeightRule::uniform:
      return 1.0 / n;
    case WeightRule::self_half:
      return n == 1 ? 1.0 : 0.5 / (n - 1);
  }
  throw DomainError("unknown weight rule");
}

std::vector<double> compute_weights(WeightRule rule, const SortedValueList& kept, AgentId self_id) {
  if (kept.empty()) throw DomainError("cannot weight an empty list");
  const auto m = static_cast<double>(kept.size());
  switch (rule) {
    case WeightRule::uniform:
      return std::vector<double>(kept.size(), 1.0 / m);
    case WeightRule::self_half: {
      if (kept.size() == 1) return {1.0};
      std::vector<double> w(kept.size(), 0.5 / (m - 1.0));
      for (std::size_t k = 0; k < kept.size(); ++k) {
        if (kept[k].sender == self_id) w[k] = 0.5;
      }
      return w;
    }
  }
  throw DomainError("unknown weight rule");
}

UpdateOutcome compute_update(const FollowerState& state, Step t) {
  auto omega = snapshot_omega(state.buffer, state.id, state.x, t);
  auto filtered = msr_filter(omega, state.x, state.F);
  const auto& kept = filtered.kept;

  double next = 0.0;
  double smallest = 1.0;
  if (state.weight_rule == WeightRule::uniform) {
    // Sum in list order, then divide: this is the arithmetic mean.
    double sum = 0.0;
    for (const auto& item : kept) sum += item.value;
    next = sum / static_cast<double>(kept.size());
    smallest = 1.0 / static_cast<double>(kept.size());
  } else {
    const auto w = compute_weights(state.weight_rule, kept, state.id);
    for (std::size_t k = 0; k < kept.size(); ++k) {
      next += w[k] * kept[k].value;
      smallest = std::min(smallest, w[k]);
    }
  }
  // kept is sorted, so the convex hull is [front, back].
  next = std::clamp(next, kept.front().value, kept.back().value);
  return UpdateOutcome{t, next, smallest, std::move(filtered.removed), kept};
}

double swmsr_update(FollowerState& state, Step t) {
  state.last_update = compute_update(state, t);
  state.x = state.last_update->next_x;
  return state.x;
}

double min_weight(const FollowerState& state, Step t) {
  if (!state.last_update || state.last_update->step != t) {
    throw DomainError("no update was executed at step " + std::to_string(t));
  }
  return state.last_update->min_weight;
}

}  // namespace rcsim
