#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>

#include "rcsim/graph.hpp"

namespace rcsim {

// Scripted misbehaving agent. Scripts are pure functions of (step, receiver);
// randomized attacks are pre-sampled into a script when a scenario is built.
class AdversaryBehavior {
 public:
  enum class Kind { malicious_constant, malicious_script, byzantine_script };

  using StepScript = std::function<double(Step)>;
  using ReceiverScript = std::function<double(Step, AgentId)>;

  static AdversaryBehavior malicious_constant(double value);
  static AdversaryBehavior malicious_script(StepScript script, std::string label = "malicious_script");
  static AdversaryBehavior byzantine_script(ReceiverScript script, std::string label = "byzantine_script");

  // Overrides the recorded "true" state trajectory.
  AdversaryBehavior& with_true_state(StepScript script);

  Kind kind() const noexcept { return kind_; }
  bool is_malicious() const noexcept { return kind_ != Kind::byzantine_script; }
  const std::string& label() const noexcept { return label_; }
  std::optional<double> constant_value() const noexcept { return constant_; }

  // Value sent to `receiver` at step t.
  double sent_value(Step t, AgentId receiver) const;

  // Bookkeeping state. Defaults to the broadcast value for malicious kinds
  // and to the value the script would send to the adversary itself for
  // Byzantine kinds.
  double true_state(Step t, AgentId self) const;

 private:
  AdversaryBehavior(Kind kind, ReceiverScript script, std::string label, std::optional<double> constant);

  Kind kind_;
  ReceiverScript script_;
  std::optional<StepScript> true_state_;
  std::string label_;
  std::optional<double> constant_;
};

using AdversaryMap = std::map<AgentId, AdversaryBehavior>;

// Leader/follower partition of V plus the misbehaving set.
class Cast {
 public:
  Cast(int n, AgentSet leaders, AgentSet followers, AdversaryMap adversaries = {});
  // Followers are V \ leaders.
  static Cast from_leaders(int n, AgentSet leaders, AdversaryMap adversaries = {});

  int agent_count() const noexcept { return n_; }
  const AgentSet& leaders() const noexcept { return leaders_; }
  const AgentSet& followers() const noexcept { return followers_; }
  const AdversaryMap& adversaries() const noexcept { return adversaries_; }

  AgentSet adversary_ids() const;
  bool is_adversary(AgentId i) const { return adversaries_.contains(i); }

  AgentSet misbehaving_leaders() const;    // L^A
  AgentSet misbehaving_followers() const;  // S_f^A
  AgentSet normal_leaders() const;         // L^N
  AgentSet normal_followers() const;       // S_f^N

 private:
  int n_;
  AgentSet leaders_;
  AgentSet followers_;
  AdversaryMap adversaries_;
};

// Values sent by b at step t to each receiver.
std::map<AgentId, double> adversary_messages(const AdversaryBehavior& b, Step t, const AgentSet& receivers);

// Every member of `agents` broadcasts `target` forever.
AdversaryMap collusion_takeover(double target, const AgentSet& agents);

bool verify_F_local_cast(const Cast& cast, const GraphSchedule& schedule, int F, Step t0, Step horizon);

}  // namespace rcsim
