#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "rcsim/graph.hpp"
#include "rcsim/robustness.hpp"
#include "rcsim/sim.hpp"

namespace rcsim::io {

using nlohmann::json;

// Malformed JSON text. `line` is 1-based, 0 when unknown.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line) : std::runtime_error(what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Well-formed JSON that does not describe a valid object. `field` is a
// dotted path such as "adversaries.3.value".
class ValidationError : public DomainError {
 public:
  ValidationError(std::string field, const std::string& what)
      : DomainError(field + ": " + what), field_(std::move(field)) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

json parse_json_text(const std::string& text);
json read_json_file(const std::string& path);

// {"n": int, "in_neighbors": {"<id>": [ids...]}}
json to_json(const Digraph& d);
Digraph digraph_from_json(const json& j);

// {"t0": int, "dwell": int, "graphs": [graph...]}
json to_json(const GraphSchedule& s);
GraphSchedule schedule_from_json(const json& j);

// Scenario documents; see README for the schema.
ScenarioConfig scenario_from_json(const json& j);
ScenarioConfig load_scenario_file(const std::string& path);

// "4-8", "1,3,5" and "1-3,7" forms.
AgentSet parse_agent_set(const std::string& text);
std::string format_agent_set(const AgentSet& s);

void write_trace_csv(std::ostream& out, const Trace& trace);
void write_trace_jsonl(std::ostream& out, const Trace& trace);

json to_json(const Lemma1Report& r);
json to_json(const Theorem1Report& r);
json to_json(const TraceVerification& v);

}  // namespace rcsim::io
