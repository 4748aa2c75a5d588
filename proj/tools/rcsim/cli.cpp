#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rcsim/circulant.hpp"
#include "rcsim/io.hpp"
#include "rcsim/presets.hpp"
#include "rcsim/robustness.hpp"
#include "rcsim/sim.hpp"

namespace rcsim::cli {
namespace {

using io::json;

constexpr int kBruteForceCrossCheckMax = 12;

struct RunOptions {
  std::string preset;
  std::string config;
  std::string out;
  std::string format = "csv";
  std::string report;
};

struct RobustnessOptions {
  std::string schedule;
  std::string preset;
  std::string set;
  int r = 0;
  std::optional<Step> window;
  std::optional<Step> t0;
  std::optional<Step> horizon;
  std::string report;
};

struct GenerateOptions {
  int n = 0;
  int k = 0;
  std::string partition;
  Step dwell = 1;
  Step t0 = 0;
  std::string out = "-";
};

// Writes to `path`, or to `out` when path is "-".
template <typename F>
void emit(const std::string& path, std::ostream& out, F&& write) {
  if (path == "-") {
    write(out);
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw io::ParseError("cannot write " + path, 0);
  write(f);
}

std::optional<std::uint64_t> seed_from_env() {
  const char* raw = std::getenv("RCSIM_SEED");
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  try {
    std::size_t used = 0;
    const auto v = std::stoull(raw, &used);
    if (used != std::string(raw).size()) throw std::invalid_argument(raw);
    return v;
  } catch (const std::exception&) {
    throw io::ValidationError("RCSIM_SEED", std::string("not a nonnegative integer: '") + raw + "'");
  }
}

int cmd_run(const RunOptions& o, std::ostream& out, std::ostream& err) {
  ScenarioConfig cfg = o.preset.empty() ? io::load_scenario_file(o.config) : load_preset(o.preset);
  if (auto seed = seed_from_env()) cfg.seed = *seed;
  if (o.format != "csv" && o.format != "jsonl") throw io::ValidationError("--format", "expected csv or jsonl");

  const Trace trace = run(cfg);
  const TraceVerification v = verify_trace(trace);
  const bool claim_ok = certify_claim(cfg);

  if (!o.out.empty()) {
    emit(o.out, out, [&](std::ostream& s) {
      if (o.format == "csv") {
        io::write_trace_csv(s, trace);
      } else {
        io::write_trace_jsonl(s, trace);
      }
    });
  }

  const bool leaders_anchor = cfg.anchor == AnchorMode::leaders;
  std::optional<double> final_error;
  std::string error_label;
  if (leaders_anchor && !cfg.cast.normal_leaders().empty()) {
    final_error = tracking_error(trace, trace.last());
    error_label = "tracking error";
  } else if (!leaders_anchor) {
    const double target = *cfg.cast.adversaries().begin()->second.constant_value();
    final_error = distance_to(trace, trace.last(), target);
    error_label = "distance to colluding value " + std::to_string(target);
  }

  std::ostream& summary = o.out == "-" ? err : out;
  summary << "scenario   " << cfg.name << " (n=" << cfg.cast.agent_count() << ", F=" << cfg.F << ", T=" << cfg.window
          << ", seed=" << cfg.seed << ")\n";
  summary << "steps      " << trace.t0() << ".." << trace.last() << "\n";
  summary << "alpha      " << trace.alpha() << "\n";
  if (final_error) summary << "final      " << error_label << " = " << *final_error << "\n";
  if (cfg.claim) {
    summary << "claim      strongly (" << cfg.window << ", " << cfg.schedule.t0() << ", " << cfg.claim->r
            << ")-robust w.r.t. " << io::format_agent_set(cfg.claim->set) << ": " << (claim_ok ? "true" : "false")
            << "\n";
  }
  summary << "lemma1     " << to_string(v.lemma1_verdict) << " (" << v.lemma1.size() << " intervals)\n";
  summary << "theorem1   " << to_string(v.theorem1_verdict) << " (" << v.theorem1.size() << " checkpoints)\n";
  for (const auto& h : v.theorem1_hypotheses) {
    if (!h.holds) summary << "  hypothesis not met: " << h.name << " (" << h.detail << ")\n";
  }

  if (!o.report.empty()) {
    json rep = io::to_json(v);
    rep["scenario"] = cfg.name;
    rep["seed"] = cfg.seed;
    rep["steps"] = {trace.t0(), trace.last()};
    rep["alpha"] = trace.alpha();
    if (final_error) rep["final_error"] = *final_error;
    if (cfg.claim) {
      rep["claim"] = {{"set", std::vector<AgentId>(cfg.claim->set.begin(), cfg.claim->set.end())},
                      {"r", cfg.claim->r},
                      {"holds", claim_ok}};
    }
    emit(o.report, out, [&](std::ostream& s) { s << rep.dump(2) << '\n'; });
  }

  const bool ok = claim_ok && v.lemma1_verdict == Verdict::pass && v.theorem1_verdict == Verdict::pass;
  return ok ? kSuccess : kCheckFailed;
}

// A schedule document, or a scenario whose schedule and window are borrowed.
std::pair<GraphSchedule, Step> schedule_from_document(const json& j) {
  if (j.is_object() && (j.contains("circulant") || j.contains("schedule"))) {
    auto cfg = io::scenario_from_json(j);
    return {cfg.schedule, cfg.window};
  }
  return {io::schedule_from_json(j), 0};
}

int cmd_check_robustness(const RobustnessOptions& o, std::ostream& out) {
  auto [schedule, default_window] = [&]() -> std::pair<GraphSchedule, Step> {
    if (!o.preset.empty()) {
      auto cfg = load_preset(o.preset);
      return {cfg.schedule, cfg.window};
    }
    return schedule_from_document(io::read_json_file(o.schedule));
  }();
  if (o.t0) schedule = schedule.shifted_to(*o.t0);
  const Step window = o.window.value_or(default_window);
  if (window < 0) throw io::ValidationError("--window", "must be nonnegative");
  const AgentSet set = io::parse_agent_set(o.set);
  const WindowedUnion wu{schedule, window};
  const Step first = schedule.t0() + window;
  const Step horizon = o.horizon.value_or(first + schedule.period() - 1);

  const bool robust = is_strongly_Tt0r_robust_wrt(wu, set, o.r, horizon);
  out << "strongly (" << window << ", " << schedule.t0() << ", " << o.r << ")-robust w.r.t. "
      << io::format_agent_set(set) << ": " << (robust ? "true" : "false") << "\n";

  json rep{{"window", window}, {"t0", schedule.t0()},  {"r", o.r},
           {"horizon", horizon}, {"set", std::vector<AgentId>(set.begin(), set.end())}, {"robust", robust}};

  bool agree = true;
  if (schedule.agent_count() <= kBruteForceCrossCheckMax) {
    bool brute = true;
    const Step last = std::min(horizon, first + schedule.period() - 1);
    for (Step t = first; t <= last && brute; ++t) brute = brute_force_strong_robustness(union_digraph(wu, t), set, o.r);
    agree = brute == robust;
    out << "brute-force cross-check: " << (brute ? "true" : "false") << (agree ? " (agrees)" : " (DISAGREES)") << "\n";
    rep["brute_force"] = brute;
  }
  if (!o.report.empty()) emit(o.report, out, [&](std::ostream& s) { s << rep.dump(2) << '\n'; });
  return robust && agree ? kSuccess : kCheckFailed;
}

OffsetPartition parse_partition(const std::string& text, int k) {
  if (text.empty()) return consecutive_partition(k, std::min(k, 3));
  if (text.front() == '[') {
    const json j = io::parse_json_text(text);
    OffsetPartition p;
    if (!j.is_array()) throw io::ValidationError("--partition", "expected an array of arrays");
    for (const auto& cls : j) {
      if (!cls.is_array()) throw io::ValidationError("--partition", "expected an array of arrays");
      std::vector<int> c;
      for (const auto& a : cls) {
        if (!a.is_number_integer()) throw io::ValidationError("--partition", "offsets must be integers");
        c.push_back(a.get<int>());
      }
      p.push_back(std::move(c));
    }
    return p;
  }
  OffsetPartition p;
  std::stringstream classes(text);
  std::string cls;
  while (std::getline(classes, cls, ';')) {
    std::vector<int> c;
    std::stringstream offsets(cls);
    std::string a;
    while (std::getline(offsets, a, ',')) {
      try {
        std::size_t used = 0;
        c.push_back(std::stoi(a, &used));
        if (used != a.size()) throw std::invalid_argument(a);
      } catch (const std::exception&) {
        throw io::ValidationError("--partition", "bad offset '" + a + "'");
      }
    }
    p.push_back(std::move(c));
  }
  return p;
}

int cmd_generate(const GenerateOptions& o, std::ostream& out) {
  const OffsetPartition partition = parse_partition(o.partition, o.k);
  GraphSchedule s = [&] {
    try {
      return make_partitioned_circulant_schedule(o.n, o.k, partition, o.dwell, o.t0);
    } catch (const DomainError& e) {
      throw io::ValidationError("--partition", e.what());
    }
  }();
  emit(o.out, out, [&](std::ostream& f) { f << io::to_json(s).dump(2) << '\n'; });
  return kSuccess;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Resilient leader-follower consensus simulator and robustness toolkit", "rcsim"};
  app.require_subcommand(1);

  RunOptions run_opts;
  auto* run_cmd = app.add_subcommand("run", "Simulate a scenario and check the convergence guarantees on its trace");
  auto* preset_opt = run_cmd->add_option("--preset", run_opts.preset, "Built-in scenario (sim1, sim2, takeover)");
  auto* config_opt = run_cmd->add_option("--config", run_opts.config, "Scenario JSON file");
  preset_opt->excludes(config_opt);
  run_cmd->add_option("--out", run_opts.out, "Trace output path ('-' for stdout)");
  run_cmd->add_option("--format", run_opts.format, "Trace format: csv or jsonl");
  run_cmd->add_option("--report", run_opts.report, "Write a JSON checker report ('-' for stdout)");

  RobustnessOptions rob;
  auto* rob_cmd = app.add_subcommand("check-robustness", "Certify strong (T, t0, r)-robustness of a schedule");
  auto* sched_opt = rob_cmd->add_option("--schedule", rob.schedule, "Schedule or scenario JSON file");
  auto* rob_preset = rob_cmd->add_option("--preset", rob.preset, "Use a built-in scenario's schedule");
  sched_opt->excludes(rob_preset);
  rob_cmd->add_option("--set", rob.set, "Agent set, e.g. 4-8 or 1,3,5")->required();
  rob_cmd->add_option("--r", rob.r, "Robustness parameter r")->required();
  rob_cmd->add_option("--window", rob.window, "Window length T (defaults to the scenario's T, else 0)");
  rob_cmd->add_option("--t0", rob.t0, "Start step (defaults to the schedule's t0)");
  rob_cmd->add_option("--horizon", rob.horizon, "Last step to check");
  rob_cmd->add_option("--report", rob.report, "Write a JSON report ('-' for stdout)");

  GenerateOptions gen;
  auto* gen_cmd = app.add_subcommand("generate", "Write a partitioned k-circulant schedule as JSON");
  gen_cmd->add_option("--n", gen.n, "Agent count")->required();
  gen_cmd->add_option("--k", gen.k, "Circulant order k")->required();
  gen_cmd->add_option("--partition", gen.partition, "Offset classes, e.g. \"1,2,3;4,5;6,7\" or JSON");
  gen_cmd->add_option("--dwell", gen.dwell, "Steps each graph stays active");
  gen_cmd->add_option("--t0", gen.t0, "Schedule start step");
  gen_cmd->add_option("--out", gen.out, "Output path ('-' for stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  }

  try {
    if (run_cmd->parsed()) {
      if (run_opts.preset.empty() && run_opts.config.empty()) {
        err << "error: run needs --preset or --config\n";
        return kParseError;
      }
      return cmd_run(run_opts, out, err);
    }
    if (rob_cmd->parsed()) {
      if (rob.preset.empty() && rob.schedule.empty()) {
        err << "error: check-robustness needs --schedule or --preset\n";
        return kParseError;
      }
      return cmd_check_robustness(rob, out);
    }
    return cmd_generate(gen, out);
  } catch (const io::ParseError& e) {
    err << "parse error";
    if (e.line() > 0) err << " (line " << e.line() << ")";
    err << ": " << e.what() << "\n";
    return kParseError;
  } catch (const io::ValidationError& e) {
    err << "validation error: " << e.what() << "\n";
    return kValidationError;
  } catch (const DomainError& e) {
    err << "validation error: " << e.what() << "\n";
    return kValidationError;
  }
}

}  // namespace rcsim::cli
