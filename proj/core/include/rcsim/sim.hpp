#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rcsim/adversary.hpp"
#include "rcsim/graph.hpp"
#include "rcsim/protocol.hpp"

namespace rcsim {

struct InitialStates {
  double low = -25.0;
  double high = 25.0;
  std::map<AgentId, double> overrides;
};

// Which agents play the role of the reference in envelopes and checkers.
// `adversaries` treats a colluding set broadcasting one constant as the
// leader set of a leaderless network.
enum class AnchorMode { leaders, adversaries };

// Robustness property a scenario claims: strongly (T, t0, r)-robust w.r.t. set.
struct RobustnessClaim {
  AgentSet set;
  int r = 0;
};

struct ScenarioConfig {
  std::string name;
  GraphSchedule schedule;
  Cast cast;
  int F = 0;
  Step window = 0;
  std::optional<double> alpha;  // defaults to the weight rule's lower bound
  WeightRule weight_rule = WeightRule::uniform;
  LeaderSpec reference;
  InitialStates initial;
  Step horizon = 1;  // last recorded step
  std::uint64_t seed = 0;
  AnchorMode anchor = AnchorMode::leaders;
  std::optional<RobustnessClaim> claim;
};

// Throws DomainError describing the first problem found.
void validate(const ScenarioConfig& config);

struct Message {
  AgentId sender;
  AgentId receiver;
  double value;
  friend bool operator==(const Message&, const Message&) = default;
};

struct TraceRecord {
  Step t = 0;
  std::vector<double> states;  // index i - 1 holds agent i
  std::vector<Message> sent;   // sorted by (sender, receiver)
  double M_bar = 0.0;
  double m_bar = 0.0;
  double V = 0.0;
  std::map<AgentId, AgentSet> removed;  // per normal follower

  double state(AgentId i) const { return states.at(static_cast<std::size_t>(i - 1)); }
  friend bool operator==(const TraceRecord&, const TraceRecord&) = default;
};

struct Envelope {
  double M_bar;
  double m_bar;
  double V;
};

class Trace {
 public:
  Trace(ScenarioConfig config, double alpha);

  const ScenarioConfig& config() const noexcept { return config_; }
  double alpha() const noexcept { return alpha_; }
  Step t0() const noexcept { return config_.schedule.t0(); }
  Step last() const noexcept { return t0() + static_cast<Step>(records_.size()) - 1; }
  int agent_count() const noexcept { return config_.cast.agent_count(); }

  const std::vector<TraceRecord>& records() const noexcept { return records_; }
  const TraceRecord& at(Step t) const;
  void append(TraceRecord record);

  // Agents whose states enter the envelope alongside normal followers.
  const AgentSet& anchors() const noexcept { return anchors_; }
  const AgentSet& normal_followers() const noexcept { return normal_followers_; }
  // Adversaries that the F-local hypothesis applies to.
  AgentSet hypothesis_adversaries() const;

 private:
  ScenarioConfig config_;
  double alpha_;
  AgentSet anchors_;
  AgentSet normal_followers_;
  std::vector<TraceRecord> records_;
};

Trace run(const ScenarioConfig& config);

// Max/min over normal followers and anchors across [t - T', t].
Envelope envelope(const Trace& trace, Step t);

// max |x_i - x_l| over normal followers i and normal leaders l.
double tracking_error(const Trace& trace, Step t);

// max |x_i - target| over normal followers.
double distance_to(const Trace& trace, Step t, double target);

enum class Verdict { pass, fail, hypothesis_failed };
const char* to_string(Verdict v);

struct HypothesisCheck {
  std::string name;
  bool holds;
  std::string detail;
};

struct Violation {
  Step t;
  AgentId agent;  // 0 when the violation concerns the envelope itself
  std::string kind;
  std::string detail;
};

struct Lemma1Report {
  Step t1;
  Step t2;
  Verdict verdict;
  std::vector<HypothesisCheck> hypotheses;
  std::vector<Violation> violations;
};

// Safety and envelope monotonicity on [t1, t2). Anchor states must be
// constant on the interval (DomainError otherwise); the F-local hypothesis
// is checked and reported rather than assumed.
Lemma1Report check_lemma1(const Trace& trace, Step t1, Step t2);

struct Theorem1Report {
  Step t1;
  int sigma;
  Step checkpoint;  // t1 + (|S_f^N| + 1) * sigma * T
  double alpha;
  double factor;  // (1 - alpha^((|S_f^N| + 1) T))^sigma
  double V_start;  // V[t1 + T]
  double V_checkpoint;
  double bound;
  bool holds;
};

inline constexpr double kTheorem1Slack = 1e-9;

// Contraction bound at one checkpoint. Throws HypothesisError naming the
// first hypothesis that fails on the interval.
Theorem1Report check_theorem1_bound(const Trace& trace, Step t1, int sigma);

// Maximal intervals [start, end) on which every anchor state is constant.
std::vector<std::pair<Step, Step>> constant_anchor_intervals(const Trace& trace);

struct TraceVerification {
  std::vector<Lemma1Report> lemma1;
  std::vector<Theorem1Report> theorem1;
  std::vector<HypothesisCheck> theorem1_hypotheses;
  Verdict lemma1_verdict = Verdict::pass;
  Verdict theorem1_verdict = Verdict::pass;
};

// Lemma 1 on every constant-anchor interval and the contraction bound at
// every admissible (t1, sigma) inside those intervals.
TraceVerification verify_trace(const Trace& trace);

}  // namespace rcsim
