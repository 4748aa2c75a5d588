#include "rcsim/sim.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>

#include "rcsim/robustness.hpp"

namespace rcsim {
namespace {

std::string str(Step t) { return std::to_string(t); }

Envelope envelope_over(const std::vector<TraceRecord>& records, Step t0, Step window, const AgentSet& tracked,
                       Step t) {
  const Step first = std::max(t0, t - window);
  double hi = -std::numeric_limits<double>::infinity();
  double lo = std::numeric_limits<double>::infinity();
  for (Step tau = first; tau <= t; ++tau) {
    const auto& rec = records[static_cast<std::size_t>(tau - t0)];
    for (AgentId i : tracked) {
      const double x = rec.state(i);
      hi = std::max(hi, x);
      lo = std::min(lo, x);
    }
  }
  if (tracked.empty()) return {0.0, 0.0, 0.0};
  return {hi, lo, hi - lo};
}

AgentSet tracked_agents(const Trace& trace) {
  AgentSet s = trace.normal_followers();
  s.insert(trace.anchors().begin(), trace.anchors().end());
  return s;
}

void require_in_range(const Trace& trace, Step t) {
  if (t < trace.t0() || t > trace.last()) {
    throw DomainError("step " + str(t) + " outside trace range [" + str(trace.t0()) + ", " + str(trace.last()) + "]");
  }
}

// Anchor states identical across [first, last].
bool anchors_constant(const Trace& trace, Step first, Step last) {
  first = std::max(first, trace.t0());
  for (AgentId a : trace.anchors()) {
    const double v = trace.at(first).state(a);
    for (Step t = first + 1; t <= last; ++t) {
      if (trace.at(t).state(a) != v) return false;
    }
  }
  return true;
}

// The strong-robustness set is L for leader anchoring (misbehaving leaders
// included) and the colluding set otherwise.
const AgentSet& robustness_source(const Trace& trace) {
  return trace.config().anchor == AnchorMode::leaders ? trace.config().cast.leaders() : trace.anchors();
}

struct StaticHypotheses {
  std::vector<HypothesisCheck> checks;
  bool all_hold() const {
    return std::all_of(checks.begin(), checks.end(), [](const HypothesisCheck& h) { return h.holds; });
  }
};

StaticHypotheses theorem1_static_hypotheses(const Trace& trace, Step horizon) {
  const auto& cfg = trace.config();
  StaticHypotheses h;
  h.checks.push_back({"window", cfg.window >= 1, "T = " + str(cfg.window) + " (contraction needs T >= 1)"});
  h.checks.push_back({"normal followers", !trace.normal_followers().empty(),
                      std::to_string(trace.normal_followers().size()) + " normal followers"});
  const AgentSet& source = robustness_source(trace);
  h.checks.push_back({"anchors", !source.empty() && !trace.anchors().empty(),
                      std::to_string(trace.anchors().size()) + " anchor agents"});
  if (!h.all_hold()) return h;

  const int r = 2 * cfg.F + 1;
  const Step first = cfg.schedule.t0() + cfg.window;
  const bool robust = is_strongly_Tt0r_robust_wrt(WindowedUnion{cfg.schedule, cfg.window}, source, r,
                                                  std::max(horizon, first));
  h.checks.push_back({"strong robustness", robust,
                      "strongly (" + str(cfg.window) + ", " + str(cfg.schedule.t0()) + ", " + std::to_string(r) +
                          ")-robust w.r.t. anchor set"});
  const bool local = is_F_local(cfg.schedule, trace.hypothesis_adversaries(), cfg.F, cfg.schedule.t0(),
                                std::max(horizon, cfg.schedule.t0()));
  h.checks.push_back({"F-local", local, "adversary set is " + std::to_string(cfg.F) + "-local"});
  return h;
}

Theorem1Report bound_at(const Trace& trace, Step t1, int sigma) {
  const auto& cfg = trace.config();
  const auto followers = static_cast<Step>(trace.normal_followers().size());
  const Step T = cfg.window;
  const Step span = (followers + 1) * T;
  Theorem1Report rep{};
  rep.t1 = t1;
  rep.sigma = sigma;
  rep.checkpoint = t1 + span * sigma;
  rep.alpha = trace.alpha();
  rep.factor = std::pow(1.0 - std::pow(trace.alpha(), static_cast<double>(span)), sigma);
  rep.V_start = trace.at(t1 + T).V;
  rep.V_checkpoint = trace.at(rep.checkpoint).V;
  rep.bound = rep.factor * rep.V_start;
  rep.holds = rep.V_checkpoint <= rep.bound + kTheorem1Slack;
  return rep;
}

}  // namespace

void validate(const ScenarioConfig& c) {
  const int n = c.cast.agent_count();
  if (c.schedule.agent_count() != n) {
    throw DomainError("schedule has " + std::to_string(c.schedule.agent_count()) + " agents but cast has " +
                      std::to_string(n));
  }
  if (c.F < 0) throw DomainError("F must be >= 0");
  if (c.window < 0) throw DomainError("T must be >= 0");
  if (c.horizon < c.schedule.t0() + 1) throw DomainError("horizon must be at least t0 + 1");
  if (c.initial.low > c.initial.high) throw DomainError("initial-state range is empty");
  for (const auto& [i, v] : c.initial.overrides) {
    if (i < 1 || i > n) throw DomainError("initial state given for unknown agent " + std::to_string(i));
    if (!std::isfinite(v)) throw DomainError("initial state of agent " + std::to_string(i) + " is not finite");
  }
  if (c.reference.breakpoints().front().from > c.schedule.t0()) {
    throw DomainError("reference is undefined at t0");
  }
  const double bound = weight_lower_bound(c.weight_rule, n);
  if (c.alpha && (*c.alpha <= 0.0 || *c.alpha > bound)) {
    throw DomainError("alpha must lie in (0, " + std::to_string(bound) + "] for the chosen weight rule");
  }
  if (c.anchor == AnchorMode::adversaries) {
    if (c.cast.adversaries().empty()) throw DomainError("adversary anchoring needs a nonempty adversary set");
    std::optional<double> common;
    for (const auto& [i, b] : c.cast.adversaries()) {
      const auto v = b.constant_value();
      if (!v) throw DomainError("adversary anchoring needs constant broadcasts (agent " + std::to_string(i) + ")");
      if (common && *common != *v) throw DomainError("colluding adversaries must broadcast a common value");
      common = v;
    }
  }
  if (c.claim) {
    if (c.claim->set.empty()) throw DomainError("robustness claim needs a nonempty set");
    for (AgentId i : c.claim->set) {
      if (i < 1 || i > n) throw DomainError("robustness claim names unknown agent " + std::to_string(i));
    }
  }
}

Trace::Trace(ScenarioConfig config, double alpha) : config_(std::move(config)), alpha_(alpha) {
  normal_followers_ = config_.cast.normal_followers();
  anchors_ = config_.anchor == AnchorMode::leaders ? config_.cast.normal_leaders() : config_.cast.adversary_ids();
}

const TraceRecord& Trace::at(Step t) const {
  require_in_range(*this, t);
  return records_[static_cast<std::size_t>(t - t0())];
}

void Trace::append(TraceRecord record) {
  if (record.t != t0() + static_cast<Step>(records_.size())) throw DomainError("trace records must be contiguous");
  records_.push_back(std::move(record));
}

AgentSet Trace::hypothesis_adversaries() const {
  // Colluding anchors are the reference, not an F-local obstruction.
  if (config_.anchor == AnchorMode::adversaries) return {};
  return config_.cast.adversary_ids();
}

Trace run(const ScenarioConfig& config) {
  validate(config);
  const auto& cast = config.cast;
  const int n = cast.agent_count();
  const Step t0 = config.schedule.t0();
  Trace trace(config, config.alpha.value_or(weight_lower_bound(config.weight_rule, n)));

  std::mt19937_64 rng(config.seed);
  std::uniform_real_distribution<double> draw(config.initial.low, config.initial.high);
  std::vector<double> x(static_cast<std::size_t>(n));
  for (AgentId i = 1; i <= n; ++i) {
    const double sample = draw(rng);
    auto& xi = x[static_cast<std::size_t>(i - 1)];
    if (auto it = cast.adversaries().find(i); it != cast.adversaries().end()) {
      xi = it->second.true_state(t0, i);
    } else if (cast.leaders().contains(i)) {
      xi = config.reference.value(t0);
    } else {
      auto ov = config.initial.overrides.find(i);
      xi = ov != config.initial.overrides.end() ? ov->second : sample;
    }
  }

  std::map<AgentId, FollowerState> followers;
  for (AgentId i : trace.normal_followers()) {
    followers.emplace(i, FollowerState{i, x[static_cast<std::size_t>(i - 1)], ValueBuffer(config.window, t0),
                                       config.F, config.weight_rule, trace.alpha(), std::nullopt});
  }

  // Out-neighbor lists per distinct scheduled graph.
  std::vector<std::vector<AgentSet>> outs;
  for (const auto& g : config.schedule.graphs()) {
    std::vector<AgentSet> o(static_cast<std::size_t>(n) + 1);
    for (AgentId to = 1; to <= n; ++to) {
      for (AgentId from : g.in_neighbors(to)) o[static_cast<std::size_t>(from)].insert(to);
    }
    outs.push_back(std::move(o));
  }

  AgentSet tracked = trace.normal_followers();
  tracked.insert(trace.anchors().begin(), trace.anchors().end());
  std::vector<TraceRecord> history;

  for (Step t = t0; t <= config.horizon; ++t) {
    TraceRecord rec;
    rec.t = t;
    rec.states = x;

    const auto& out = outs[config.schedule.active_index(t)];
    for (AgentId j = 1; j <= n; ++j) {
      const auto& receivers = out[static_cast<std::size_t>(j)];
      if (receivers.empty()) continue;
      std::map<AgentId, double> msgs;
      if (auto it = cast.adversaries().find(j); it != cast.adversaries().end()) {
        msgs = adversary_messages(it->second, t, receivers);
      } else {
        for (AgentId k : receivers) msgs.emplace(k, x[static_cast<std::size_t>(j - 1)]);
      }
      for (const auto& [k, v] : msgs) {
        rec.sent.push_back({j, k, v});
        if (auto f = followers.find(k); f != followers.end()) f->second.buffer.record(j, t, v);
      }
    }

    // Every update reads only the frozen round-start states above.
    std::vector<double> next(x.size());
    for (AgentId i = 1; i <= n; ++i) {
      const auto idx = static_cast<std::size_t>(i - 1);
      if (auto it = cast.adversaries().find(i); it != cast.adversaries().end()) {
        next[idx] = it->second.true_state(t + 1, i);
      } else if (cast.leaders().contains(i)) {
        next[idx] = leader_value(config.reference, t);
      }
    }
    for (auto& [i, st] : followers) {
      const double xi = swmsr_update(st, t);
      next[static_cast<std::size_t>(i - 1)] = xi;
      rec.removed.emplace(i, st.last_update->removed);
    }

    history.push_back(rec);
    const Envelope e = envelope_over(history, t0, config.window, tracked, t);
    history.back().M_bar = e.M_bar;
    history.back().m_bar = e.m_bar;
    history.back().V = e.V;
    x = std::move(next);
  }
  for (auto& rec : history) trace.append(std::move(rec));
  return trace;
}

Envelope envelope(const Trace& trace, Step t) {
  require_in_range(trace, t);
  return envelope_over(trace.records(), trace.t0(), trace.config().window, tracked_agents(trace), t);
}

double tracking_error(const Trace& trace, Step t) {
  require_in_range(trace, t);
  const AgentSet leaders = trace.config().cast.normal_leaders();
  if (leaders.empty()) throw DomainError("tracking error is undefined without normally behaving leaders");
  const auto& rec = trace.at(t);
  double worst = 0.0;
  for (AgentId i : trace.config().cast.normal_followers()) {
    for (AgentId l : leaders) worst = std::max(worst, std::abs(rec.state(i) - rec.state(l)));
  }
  return worst;
}

double distance_to(const Trace& trace, Step t, double target) {
  require_in_range(trace, t);
  const auto& rec = trace.at(t);
  double worst = 0.0;
  for (AgentId i : trace.normal_followers()) worst = std::max(worst, std::abs(rec.state(i) - target));
  return worst;
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::pass:
      return "pass";
    case Verdict::fail:
      return "fail";
    case Verdict::hypothesis_failed:
      return "hypothesis_failed";
  }
  return "unknown";
}

Lemma1Report check_lemma1(const Trace& trace, Step t1, Step t2) {
  if (t2 <= t1) throw DomainError("lemma interval needs t2 > t1");
  require_in_range(trace, t1);
  if (t2 - 1 > trace.last()) throw DomainError("lemma interval extends past the trace");
  // Leader states equal f_r[t-1], so this is f_r constant on [t1-1, t2-2].
  if (!anchors_constant(trace, t1, t2 - 1)) {
    throw DomainError("reference is not constant on [" + str(t1) + ", " + str(t2) + ")");
  }

  Lemma1Report rep{t1, t2, Verdict::pass, {}, {}};
  const auto& cfg = trace.config();
  rep.hypotheses.push_back({"normal followers", !trace.normal_followers().empty(), "S_f^N nonempty"});
  const bool local = is_F_local(cfg.schedule, trace.hypothesis_adversaries(), cfg.F, trace.t0(), trace.last());
  rep.hypotheses.push_back({"F-local", local, "adversary set is " + std::to_string(cfg.F) + "-local"});
  for (const auto& h : rep.hypotheses) {
    if (!h.holds) {
      rep.verdict = Verdict::hypothesis_failed;
      return rep;
    }
  }

  const double hi = trace.at(t1).M_bar;
  const double lo = trace.at(t1).m_bar;
  for (Step t = t1; t < t2; ++t) {
    const auto& rec = trace.at(t);
    for (AgentId i : trace.normal_followers()) {
      const double xi = rec.state(i);
      if (xi > hi || xi < lo) {
        rep.violations.push_back({t, i, "safety",
                                  "state " + std::to_string(xi) + " outside [" + std::to_string(lo) + ", " +
                                      std::to_string(hi) + "]"});
      }
    }
    if (t > t1) {
      const auto& prev = trace.at(t - 1);
      if (rec.M_bar > prev.M_bar) {
        rep.violations.push_back({t, 0, "M_bar increased",
                                  std::to_string(prev.M_bar) + " -> " + std::to_string(rec.M_bar)});
      }
      if (rec.m_bar < prev.m_bar) {
        rep.violations.push_back({t, 0, "m_bar decreased",
                                  std::to_string(prev.m_bar) + " -> " + std::to_string(rec.m_bar)});
      }
    }
  }
  if (!rep.violations.empty()) rep.verdict = Verdict::fail;
  return rep;
}

Theorem1Report check_theorem1_bound(const Trace& trace, Step t1, int sigma) {
  if (sigma < 1) throw DomainError("sigma must be >= 1");
  require_in_range(trace, t1);
  const auto& cfg = trace.config();
  const Step T = cfg.window;
  const Step checkpoint = t1 + (static_cast<Step>(trace.normal_followers().size()) + 1) * sigma * T;

  auto hyp = theorem1_static_hypotheses(trace, checkpoint);
  for (const auto& h : hyp.checks) {
    if (!h.holds) throw HypothesisError(h.name, h.detail);
  }
  if (t1 < trace.t0() + T) throw HypothesisError("t1 >= t0 + T", "t1 = " + str(t1));
  if (checkpoint > trace.last()) {
    throw HypothesisError("interval within trace", "checkpoint " + str(checkpoint) + " past last step " +
                                                       str(trace.last()));
  }
  if (!anchors_constant(trace, t1 - T, checkpoint)) {
    throw HypothesisError("constant reference", "reference varies on [" + str(t1 - T) + ", " + str(checkpoint) + "]");
  }
  return bound_at(trace, t1, sigma);
}

std::vector<std::pair<Step, Step>> constant_anchor_intervals(const Trace& trace) {
  std::vector<std::pair<Step, Step>> out;
  Step start = trace.t0();
  for (Step t = trace.t0() + 1; t <= trace.last(); ++t) {
    bool same = true;
    for (AgentId a : trace.anchors()) {
      if (trace.at(t).state(a) != trace.at(t - 1).state(a)) {
        same = false;
        break;
      }
    }
    if (!same) {
      out.emplace_back(start, t);
      start = t;
    }
  }
  out.emplace_back(start, trace.last() + 1);
  return out;
}

TraceVerification verify_trace(const Trace& trace) {
  TraceVerification v;
  const auto intervals = constant_anchor_intervals(trace);

  for (const auto& [a, b] : intervals) {
    if (b - a < 2) continue;
    v.lemma1.push_back(check_lemma1(trace, a, b));
  }
  for (const auto& rep : v.lemma1) {
    if (rep.verdict == Verdict::fail) {
      v.lemma1_verdict = Verdict::fail;
      break;
    }
    if (rep.verdict == Verdict::hypothesis_failed) v.lemma1_verdict = Verdict::hypothesis_failed;
  }

  auto hyp = theorem1_static_hypotheses(trace, trace.last());
  v.theorem1_hypotheses = hyp.checks;
  if (!hyp.all_hold()) {
    v.theorem1_verdict = Verdict::hypothesis_failed;
    return v;
  }
  const Step T = trace.config().window;
  const Step span = (static_cast<Step>(trace.normal_followers().size()) + 1) * T;
  for (const auto& [a, b] : intervals) {
    for (Step t1 = std::max(a, trace.t0()) + T; t1 + span <= b - 1; ++t1) {
      for (int sigma = 1; t1 + span * sigma <= b - 1; ++sigma) {
        v.theorem1.push_back(bound_at(trace, t1, sigma));
        if (!v.theorem1.back().holds) v.theorem1_verdict = Verdict::fail;
      }
    }
  }
  return v;
}

}  // namespace rcsim
