#include "rcsim/io.hpp"

#include <algorithm>
#include <fstream>
#include <cctype>
#include <iomanip>
#include <limits>
#include <ostream>
#include <sstream>

#include "rcsim/circulant.hpp"

namespace rcsim::io {
namespace {

std::size_t line_of(const std::string& text, std::size_t byte) {
  const auto end = std::min(byte, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(end), '\n'));
}

std::string join(const std::string& path, const std::string& key) { return path.empty() ? key : path + "." + key; }

// Typed field access with path-qualified errors.
class Reader {
 public:
  Reader(const json& j, std::string path) : j_(j), path_(std::move(path)) {
    if (!j_.is_object()) throw ValidationError(path_.empty() ? "<root>" : path_, "expected an object");
  }

  void allow_only(std::initializer_list<const char*> keys) const {
    for (const auto& [k, v] : j_.items()) {
      if (std::none_of(keys.begin(), keys.end(), [&](const char* a) { return k == a; })) {
        throw ValidationError(join(path_, k), "unknown field");
      }
    }
  }

  bool has(const char* key) const { return j_.contains(key); }

  const json& at(const char* key) const {
    if (!j_.contains(key)) throw ValidationError(join(path_, key), "missing required field");
    return j_.at(key);
  }

  long long integer(const char* key) const {
    const auto& v = at(key);
    if (!v.is_number_integer()) throw ValidationError(join(path_, key), "expected an integer");
    return v.get<long long>();
  }

  long long integer_or(const char* key, long long fallback) const { return has(key) ? integer(key) : fallback; }

  double number(const char* key) const { return as_number(at(key), join(path_, key)); }

  std::string string(const char* key) const {
    const auto& v = at(key);
    if (!v.is_string()) throw ValidationError(join(path_, key), "expected a string");
    return v.get<std::string>();
  }

  std::string path(const char* key) const { return join(path_, key); }

  static double as_number(const json& v, const std::string& where) {
    if (!v.is_number()) throw ValidationError(where, "expected a number");
    return v.get<double>();
  }

 private:
  const json& j_;
  std::string path_;
};

AgentId as_agent(const json& v, const std::string& where) {
  if (!v.is_number_integer()) throw ValidationError(where, "expected an agent id");
  return static_cast<AgentId>(v.get<long long>());
}

AgentId key_agent(const std::string& key, const std::string& where) {
  try {
    std::size_t used = 0;
    const int id = std::stoi(key, &used);
    if (used != key.size()) throw std::invalid_argument(key);
    return id;
  } catch (const std::exception&) {
    throw ValidationError(where, "object key '" + key + "' is not an agent id");
  }
}

AgentSet agent_list(const json& v, const std::string& where) {
  if (!v.is_array()) throw ValidationError(where, "expected an array of agent ids");
  AgentSet out;
  for (std::size_t k = 0; k < v.size(); ++k) out.insert(as_agent(v[k], where + "[" + std::to_string(k) + "]"));
  return out;
}

std::vector<double> number_list(const json& v, const std::string& where) {
  if (!v.is_array() || v.empty()) throw ValidationError(where, "expected a nonempty array of numbers");
  std::vector<double> out;
  for (std::size_t k = 0; k < v.size(); ++k) out.push_back(Reader::as_number(v[k], where + "[" + std::to_string(k) + "]"));
  return out;
}

double cyclic(const std::vector<double>& table, Step t) {
  const auto len = static_cast<Step>(table.size());
  return table[static_cast<std::size_t>(((t % len) + len) % len)];
}

AdversaryBehavior behavior_from_json(const json& j, const std::string& path) {
  Reader r(j, path);
  const std::string kind = r.string("kind");
  std::optional<AdversaryBehavior> b;
  if (kind == "malicious_constant") {
    r.allow_only({"kind", "value", "true_state"});
    b = AdversaryBehavior::malicious_constant(r.number("value"));
  } else if (kind == "malicious_table") {
    r.allow_only({"kind", "values", "true_state"});
    auto table = number_list(r.at("values"), r.path("values"));
    b = AdversaryBehavior::malicious_script([table](Step t) { return cyclic(table, t); }, kind);
  } else if (kind == "malicious_ramp") {
    r.allow_only({"kind", "start", "slope", "true_state"});
    const double start = r.number("start");
    const double slope = r.number("slope");
    b = AdversaryBehavior::malicious_script([=](Step t) { return start + slope * static_cast<double>(t); }, kind);
  } else if (kind == "byzantine_table") {
    r.allow_only({"kind", "values", "default", "true_state"});
    const auto& values = r.at("values");
    if (!values.is_object()) throw ValidationError(r.path("values"), "expected an object keyed by receiver id");
    std::map<AgentId, std::vector<double>> per_receiver;
    for (const auto& [key, v] : values.items()) {
      const auto where = r.path("values") + "." + key;
      per_receiver.emplace(key_agent(key, where), number_list(v, where));
    }
    std::vector<double> fallback;
    if (r.has("default")) fallback = number_list(r.at("default"), r.path("default"));
    b = AdversaryBehavior::byzantine_script(
        [per_receiver, fallback](Step t, AgentId k) {
          auto it = per_receiver.find(k);
          if (it != per_receiver.end()) return cyclic(it->second, t);
          if (fallback.empty()) throw DomainError("byzantine table has no entry for receiver " + std::to_string(k));
          return cyclic(fallback, t);
        },
        kind);
  } else {
    throw ValidationError(r.path("kind"), "unknown adversary kind '" + kind + "'");
  }
  if (r.has("true_state")) {
    auto table = number_list(r.at("true_state"), r.path("true_state"));
    b->with_true_state([table](Step t) { return cyclic(table, t); });
  }
  return *b;
}

LeaderSpec reference_from_json(const json& v, const std::string& where) {
  if (v.is_number()) return LeaderSpec::constant(v.get<double>(), std::numeric_limits<Step>::min() / 2);
  if (!v.is_array() || v.empty()) throw ValidationError(where, "expected a number or [[from, value], ...]");
  std::vector<LeaderSpec::Breakpoint> bps;
  for (std::size_t k = 0; k < v.size(); ++k) {
    const auto here = where + "[" + std::to_string(k) + "]";
    const auto& p = v[k];
    if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer()) {
      throw ValidationError(here, "expected [from_step, value]");
    }
    bps.push_back({p[0].get<Step>(), Reader::as_number(p[1], here)});
  }
  try {
    return LeaderSpec(std::move(bps));
  } catch (const DomainError& e) {
    throw ValidationError(where, e.what());
  }
}

OffsetPartition partition_from_json(const json& v, const std::string& where) {
  if (!v.is_array()) throw ValidationError(where, "expected an array of offset arrays");
  OffsetPartition p;
  for (std::size_t k = 0; k < v.size(); ++k) {
    const auto here = where + "[" + std::to_string(k) + "]";
    if (!v[k].is_array()) throw ValidationError(here, "expected an array of offsets");
    std::vector<int> cls;
    for (const auto& a : v[k]) {
      if (!a.is_number_integer()) throw ValidationError(here, "offsets must be integers");
      cls.push_back(a.get<int>());
    }
    p.push_back(std::move(cls));
  }
  return p;
}

GraphSchedule circulant_from_json(const json& j, const std::string& path) {
  Reader r(j, path);
  r.allow_only({"n", "k", "offset_partition", "dwell", "t0"});
  const auto n = static_cast<int>(r.integer("n"));
  const auto k = static_cast<int>(r.integer("k"));
  const Step dwell = r.integer_or("dwell", 1);
  const Step t0 = r.integer_or("t0", 0);
  OffsetPartition partition;
  try {
    partition = r.has("offset_partition") ? partition_from_json(r.at("offset_partition"), r.path("offset_partition"))
                                          : consecutive_partition(k, std::min(k, 3));
    return make_partitioned_circulant_schedule(n, k, partition, dwell, t0);
  } catch (const ValidationError&) {
    throw;
  } catch (const DomainError& e) {
    throw ValidationError(path, e.what());
  }
}

template <typename F>
auto field_guard(const std::string& field, F&& f) {
  try {
    return f();
  } catch (const ValidationError&) {
    throw;
  } catch (const DomainError& e) {
    throw ValidationError(field, e.what());
  }
}

}  // namespace

json parse_json_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.what(), line_of(text, e.byte));
  }
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path, 0);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json_text(ss.str());
}

json to_json(const Digraph& d) {
  json in = json::object();
  for (AgentId i = 1; i <= d.size(); ++i) {
    in[std::to_string(i)] = std::vector<AgentId>(d.in_neighbors(i).begin(), d.in_neighbors(i).end());
  }
  return json{{"n", d.size()}, {"in_neighbors", in}};
}

Digraph digraph_from_json(const json& j) {
  Reader r(j, "graph");
  r.allow_only({"n", "in_neighbors"});
  const auto n = static_cast<int>(r.integer("n"));
  return field_guard("graph", [&] {
    Digraph d(n);
    const auto& in = r.at("in_neighbors");
    if (!in.is_object()) throw ValidationError("graph.in_neighbors", "expected an object");
    for (const auto& [key, v] : in.items()) {
      const auto where = "graph.in_neighbors." + key;
      const AgentId to = key_agent(key, where);
      for (AgentId from : agent_list(v, where)) d.add_edge(from, to);
    }
    return d;
  });
}

json to_json(const GraphSchedule& s) {
  json graphs = json::array();
  for (const auto& g : s.graphs()) graphs.push_back(to_json(g));
  return json{{"t0", s.t0()}, {"dwell", s.dwell()}, {"graphs", graphs}};
}

GraphSchedule schedule_from_json(const json& j) {
  Reader r(j, "schedule");
  r.allow_only({"t0", "dwell", "graphs"});
  const auto& gs = r.at("graphs");
  if (!gs.is_array()) throw ValidationError("schedule.graphs", "expected an array");
  std::vector<Digraph> graphs;
  for (const auto& g : gs) graphs.push_back(digraph_from_json(g));
  const Step dwell = r.integer("dwell");
  const Step t0 = r.integer_or("t0", 0);
  return field_guard("schedule", [&] { return GraphSchedule(std::move(graphs), dwell, t0); });
}

ScenarioConfig scenario_from_json(const json& j) {
  Reader r(j, "");
  r.allow_only({"name", "preset", "n", "schedule", "circulant", "leaders", "followers", "adversaries", "F", "T",
                "alpha", "weight_rule", "reference", "initial_states", "horizon", "seed", "anchor", "claim"});

  if (r.has("schedule") == r.has("circulant")) {
    throw ValidationError("schedule", "exactly one of \"schedule\" or \"circulant\" is required");
  }
  GraphSchedule schedule =
      r.has("schedule") ? schedule_from_json(r.at("schedule")) : circulant_from_json(r.at("circulant"), "circulant");
  const int n = schedule.agent_count();
  if (r.has("n") && r.integer("n") != n) {
    throw ValidationError("n", "does not match the schedule's agent count " + std::to_string(n));
  }

  AgentSet leaders = agent_list(r.at("leaders"), "leaders");
  AdversaryMap adversaries;
  if (r.has("adversaries")) {
    const auto& a = r.at("adversaries");
    if (!a.is_object()) throw ValidationError("adversaries", "expected an object keyed by agent id");
    for (const auto& [key, v] : a.items()) {
      const auto where = "adversaries." + key;
      adversaries.emplace(key_agent(key, where), behavior_from_json(v, where));
    }
  }
  Cast cast = field_guard("leaders", [&] {
    if (r.has("followers")) return Cast(n, leaders, agent_list(r.at("followers"), "followers"), adversaries);
    return Cast::from_leaders(n, leaders, adversaries);
  });

  const auto F = r.integer("F");
  const auto T = r.integer("T");
  if (F < 0) throw ValidationError("F", "must be >= 0");
  if (T < 0) throw ValidationError("T", "must be >= 0");

  LeaderSpec reference = reference_from_json(r.at("reference"), "reference");

  InitialStates initial;
  if (r.has("initial_states")) {
    Reader is(r.at("initial_states"), "initial_states");
    is.allow_only({"low", "high", "values"});
    if (is.has("low")) initial.low = is.number("low");
    if (is.has("high")) initial.high = is.number("high");
    if (is.has("values")) {
      const auto& vals = is.at("values");
      if (!vals.is_object()) throw ValidationError("initial_states.values", "expected an object");
      for (const auto& [key, v] : vals.items()) {
        const auto where = "initial_states.values." + key;
        initial.overrides.emplace(key_agent(key, where), Reader::as_number(v, where));
      }
    }
  }

  WeightRule rule = WeightRule::uniform;
  if (r.has("weight_rule")) {
    const auto w = r.string("weight_rule");
    if (w == "uniform") {
      rule = WeightRule::uniform;
    } else if (w == "self_half") {
      rule = WeightRule::self_half;
    } else {
      throw ValidationError("weight_rule", "unknown rule '" + w + "'");
    }
  }

  AnchorMode anchor = AnchorMode::leaders;
  if (r.has("anchor")) {
    const auto a = r.string("anchor");
    if (a == "leaders") {
      anchor = AnchorMode::leaders;
    } else if (a == "adversaries") {
      anchor = AnchorMode::adversaries;
    } else {
      throw ValidationError("anchor", "expected \"leaders\" or \"adversaries\"");
    }
  }

  std::optional<RobustnessClaim> claim;
  if (r.has("claim")) {
    Reader c(r.at("claim"), "claim");
    c.allow_only({"set", "r"});
    claim = RobustnessClaim{agent_list(c.at("set"), "claim.set"), static_cast<int>(c.integer("r"))};
  }

  const auto seed = r.integer_or("seed", 1);
  if (seed < 0) throw ValidationError("seed", "must be >= 0");

  ScenarioConfig cfg{
      r.has("name") ? r.string("name") : (r.has("preset") ? r.string("preset") : std::string("scenario")),
      std::move(schedule),
      std::move(cast),
      static_cast<int>(F),
      T,
      r.has("alpha") ? std::optional<double>(r.number("alpha")) : std::nullopt,
      rule,
      std::move(reference),
      std::move(initial),
      r.integer("horizon"),
      static_cast<std::uint64_t>(seed),
      anchor,
      std::move(claim),
  };
  field_guard("scenario", [&] {
    validate(cfg);
    return 0;
  });
  return cfg;
}

ScenarioConfig load_scenario_file(const std::string& path) { return scenario_from_json(read_json_file(path)); }

AgentSet parse_agent_set(const std::string& text) {
  AgentSet out;
  std::stringstream ss(text);
  std::string part;
  auto to_int = [&](const std::string& s) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(s, &used);
    } catch (const std::exception&) {
      throw DomainError("bad agent id '" + s + "' in set '" + text + "'");
    }
    if (used != s.size()) throw DomainError("bad agent id '" + s + "' in set '" + text + "'");
    return v;
  };
  while (std::getline(ss, part, ',')) {
    part.erase(std::remove_if(part.begin(), part.end(), [](unsigned char c) { return std::isspace(c); }), part.end());
    if (part.empty()) continue;
    const auto dash = part.find('-', 1);
    if (dash == std::string::npos) {
      out.insert(to_int(part));
    } else {
      const int lo = to_int(part.substr(0, dash));
      const int hi = to_int(part.substr(dash + 1));
      if (hi < lo) throw DomainError("empty range '" + part + "'");
      for (int i = lo; i <= hi; ++i) out.insert(i);
    }
  }
  if (out.empty()) throw DomainError("agent set '" + text + "' is empty");
  return out;
}

std::string format_agent_set(const AgentSet& s) {
  std::string out = "{";
  bool first = true;
  for (AgentId i : s) {
    if (!first) out += ",";
    out += std::to_string(i);
    first = false;
  }
  return out + "}";
}

void write_trace_csv(std::ostream& out, const Trace& trace) {
  const int n = trace.agent_count();
  out << "t";
  for (AgentId i = 1; i <= n; ++i) out << ",agent_" << i;
  out << ",M_bar,m_bar,V\n";
  const auto old = out.precision(17);
  for (const auto& rec : trace.records()) {
    out << rec.t;
    for (double x : rec.states) out << ',' << x;
    out << ',' << rec.M_bar << ',' << rec.m_bar << ',' << rec.V << '\n';
  }
  out.precision(old);
}

void write_trace_jsonl(std::ostream& out, const Trace& trace) {
  for (const auto& rec : trace.records()) {
    json states = json::object();
    for (std::size_t k = 0; k < rec.states.size(); ++k) states[std::to_string(k + 1)] = rec.states[k];
    json sent = json::array();
    for (const auto& m : rec.sent) sent.push_back(json::array({m.sender, m.receiver, m.value}));
    json removed = json::object();
    for (const auto& [i, s] : rec.removed) removed[std::to_string(i)] = std::vector<AgentId>(s.begin(), s.end());
    out << json{{"t", rec.t}, {"states", states},   {"sent", sent},      {"M_bar", rec.M_bar},
                {"m_bar", rec.m_bar}, {"V", rec.V}, {"removed", removed}}
               .dump()
        << '\n';
  }
}

json to_json(const Lemma1Report& r) {
  json hyps = json::array();
  for (const auto& h : r.hypotheses) hyps.push_back({{"name", h.name}, {"holds", h.holds}, {"detail", h.detail}});
  json viol = json::array();
  for (const auto& v : r.violations) {
    viol.push_back({{"t", v.t}, {"agent", v.agent}, {"kind", v.kind}, {"detail", v.detail}});
  }
  return json{{"t1", r.t1},          {"t2", r.t2},        {"verdict", to_string(r.verdict)},
              {"pass", r.verdict == Verdict::pass}, {"hypotheses", hyps}, {"violations", viol}};
}

json to_json(const Theorem1Report& r) {
  return json{{"t1", r.t1},         {"sigma", r.sigma}, {"checkpoint", r.checkpoint},
              {"alpha", r.alpha},   {"factor", r.factor}, {"V_start", r.V_start},
              {"V_checkpoint", r.V_checkpoint}, {"bound", r.bound}, {"pass", r.holds}};
}

json to_json(const TraceVerification& v) {
  json lemma = json::array();
  for (const auto& r : v.lemma1) lemma.push_back(to_json(r));
  json hyps = json::array();
  for (const auto& h : v.theorem1_hypotheses) hyps.push_back({{"name", h.name}, {"holds", h.holds}, {"detail", h.detail}});
  json failed = json::array();
  for (const auto& r : v.theorem1) {
    if (!r.holds) failed.push_back(to_json(r));
  }
  return json{{"lemma1", {{"verdict", to_string(v.lemma1_verdict)}, {"intervals", lemma}}},
              {"theorem1",
               {{"verdict", to_string(v.theorem1_verdict)},
                {"hypotheses", hyps},
                {"checkpoints", v.theorem1.size()},
                {"failed", failed}}}};
}

}  // namespace rcsim::io
