#include "rcsim/adversary.hpp"

#include <algorithm>
#include <iterator>
#include <utility>

#include "rcsim/robustness.hpp"

namespace rcsim {

AdversaryBehavior::AdversaryBehavior(Kind kind, ReceiverScript script, std::string label,
                                     std::optional<double> constant)
    : kind_(kind), script_(std::move(script)), label_(std::move(label)), constant_(constant) {
  if (!script_) throw DomainError("adversary script is empty");
}

AdversaryBehavior AdversaryBehavior::malicious_constant(double value) {
  return AdversaryBehavior(
      Kind::malicious_constant, [value](Step, AgentId) { return value; }, "malicious_constant", value);
}

AdversaryBehavior AdversaryBehavior::malicious_script(StepScript script, std::string label) {
  if (!script) throw DomainError("adversary script is empty");
  return AdversaryBehavior(
      Kind::malicious_script, [s = std::move(script)](Step t, AgentId) { return s(t); }, std::move(label),
      std::nullopt);
}

AdversaryBehavior AdversaryBehavior::byzantine_script(ReceiverScript script, std::string label) {
  return AdversaryBehavior(Kind::byzantine_script, std::move(script), std::move(label), std::nullopt);
}

AdversaryBehavior& AdversaryBehavior::with_true_state(StepScript script) {
  if (!script) throw DomainError("true-state script is empty");
  true_state_ = std::move(script);
  return *this;
}

double AdversaryBehavior::sent_value(Step t, AgentId receiver) const {
  // Malicious kinds ignore the receiver, so every out-neighbor sees one value.
  return script_(t, is_malicious() ? AgentId{0} : receiver);
}

double AdversaryBehavior::true_state(Step t, AgentId self) const {
  if (true_state_) return (*true_state_)(t);
  return script_(t, is_malicious() ? AgentId{0} : self);
}

Cast::Cast(int n, AgentSet leaders, AgentSet followers, AdversaryMap adversaries)
    : n_(n), leaders_(std::move(leaders)), followers_(std::move(followers)), adversaries_(std::move(adversaries)) {
  if (n_ < 1) throw DomainError("cast needs at least one agent");
  auto check = [this](AgentId i, const char* what) {
    if (i < 1 || i > n_) {
      throw DomainError(std::string(what) + " id " + std::to_string(i) + " outside [1, " + std::to_string(n_) + "]");
    }
  };
  for (AgentId i : leaders_) check(i, "leader");
  for (AgentId i : followers_) check(i, "follower");
  for (const auto& [i, b] : adversaries_) check(i, "adversary");
  for (AgentId i = 1; i <= n_; ++i) {
    const bool l = leaders_.contains(i);
    const bool f = followers_.contains(i);
    if (l && f) throw DomainError("agent " + std::to_string(i) + " is both leader and follower");
    if (!l && !f) throw DomainError("agent " + std::to_string(i) + " is neither leader nor follower");
  }
}

Cast Cast::from_leaders(int n, AgentSet leaders, AdversaryMap adversaries) {
  AgentSet followers;
  for (AgentId i = 1; i <= n; ++i) {
    if (!leaders.contains(i)) followers.insert(i);
  }
  return Cast(n, std::move(leaders), std::move(followers), std::move(adversaries));
}

AgentSet Cast::adversary_ids() const {
  AgentSet out;
  for (const auto& [i, b] : adversaries_) out.insert(i);
  return out;
}

AgentSet Cast::misbehaving_leaders() const {
  AgentSet out;
  for (AgentId i : leaders_) {
    if (is_adversary(i)) out.insert(i);
  }
  return out;
}

AgentSet Cast::misbehaving_followers() const {
  AgentSet out;
  for (AgentId i : followers_) {
    if (is_adversary(i)) out.insert(i);
  }
  return out;
}

AgentSet Cast::normal_leaders() const {
  AgentSet out;
  for (AgentId i : leaders_) {
    if (!is_adversary(i)) out.insert(i);
  }
  return out;
}

AgentSet Cast::normal_followers() const {
  AgentSet out;
  for (AgentId i : followers_) {
    if (!is_adversary(i)) out.insert(i);
  }
  return out;
}

std::map<AgentId, double> adversary_messages(const AdversaryBehavior& b, Step t, const AgentSet& receivers) {
  std::map<AgentId, double> out;
  if (b.is_malicious()) {
    const double v = b.sent_value(t, 0);
    for (AgentId k : receivers) out.emplace(k, v);
  } else {
    for (AgentId k : receivers) out.emplace(k, b.sent_value(t, k));
  }
  return out;
}

AdversaryMap collusion_takeover(double target, const AgentSet& agents) {
  if (agents.empty()) throw DomainError("colluding set must be nonempty");
  AdversaryMap out;
  for (AgentId i : agents) out.emplace(i, AdversaryBehavior::malicious_constant(target));
  return out;
}

bool verify_F_local_cast(const Cast& cast, const GraphSchedule& schedule, int F, Step t0, Step horizon) {
  return is_F_local(schedule, cast.adversary_ids(), F, t0, horizon);
}

}  // namespace rcsim
