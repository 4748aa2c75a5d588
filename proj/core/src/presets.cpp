#include "rcsim/presets.hpp"

#include "rcsim/robustness.hpp"

namespace rcsim {

using io::json;

std::vector<std::string> preset_names() { return {"sim1", "sim2", "takeover"}; }

json preset_document(const std::string& name) {
  if (name == "sim1") {
    return json::parse(R"({
      "name": "sim1",
      "circulant": {"n": 15, "k": 7, "offset_partition": [[1, 2, 3], [4, 5], [6, 7]], "dwell": 4, "t0": 0},
      "leaders": [4, 5, 6, 7, 8],
      "adversaries": {
        "2": {"kind": "malicious_table", "values": [-60.0, 55.0, -40.0, 70.0]},
        "12": {"kind": "malicious_constant", "value": 100.0}
      },
      "F": 2,
      "T": 12,
      "reference": 30.0,
      "initial_states": {"low": -25.0, "high": 25.0},
      "horizon": 600,
      "seed": 2019,
      "claim": {"set": [4, 5, 6, 7, 8], "r": 5}
    })");
  }
  if (name == "sim2") {
    return json::parse(R"({
      "name": "sim2",
      "circulant": {"n": 30, "k": 7, "offset_partition": [[1, 2, 3], [4, 5], [6, 7]], "dwell": 10, "t0": 0},
      "leaders": [1, 2, 3, 4, 5, 6, 7],
      "adversaries": {
        "11": {"kind": "malicious_constant", "value": 100.0},
        "19": {"kind": "malicious_table", "values": [-80.0, -80.0, 90.0, 90.0, 0.0]},
        "26": {"kind": "malicious_ramp", "start": -40.0, "slope": -0.05}
      },
      "F": 3,
      "T": 30,
      "reference": [[0, 10.0], [2000, -15.0], [4000, 20.0]],
      "initial_states": {"low": -25.0, "high": 25.0},
      "horizon": 5999,
      "seed": 2019,
      "claim": {"set": [1, 2, 3, 4, 5, 6, 7], "r": 7}
    })");
  }
  if (name == "takeover") {
    return json::parse(R"({
      "name": "takeover",
      "circulant": {"n": 15, "k": 7, "offset_partition": [[1, 2, 3], [4, 5], [6, 7]], "dwell": 4, "t0": 0},
      "leaders": [],
      "adversaries": {
        "4": {"kind": "malicious_constant", "value": 42.0},
        "5": {"kind": "malicious_constant", "value": 42.0},
        "6": {"kind": "malicious_constant", "value": 42.0},
        "7": {"kind": "malicious_constant", "value": 42.0},
        "8": {"kind": "malicious_constant", "value": 42.0}
      },
      "anchor": "adversaries",
      "F": 2,
      "T": 12,
      "reference": 0.0,
      "initial_states": {"low": -25.0, "high": 25.0},
      "horizon": 600,
      "seed": 2019,
      "claim": {"set": [4, 5, 6, 7, 8], "r": 5}
    })");
  }
  throw DomainError("unknown preset '" + name + "'");
}

bool certify_claim(const ScenarioConfig& config) {
  if (!config.claim) return true;
  const Step first = config.schedule.t0() + config.window;
  return is_strongly_Tt0r_robust_wrt(WindowedUnion{config.schedule, config.window}, config.claim->set,
                                     config.claim->r, std::max(config.horizon, first));
}

ScenarioConfig load_preset(const std::string& name) {
  ScenarioConfig cfg = io::scenario_from_json(preset_document(name));
  if (!certify_claim(cfg)) throw DomainError("preset '" + name + "' fails its declared robustness claim");
  return cfg;
}

}  // namespace rcsim
