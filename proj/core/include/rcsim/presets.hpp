#pragma once

#include <string>
#include <vector>

#include "rcsim/io.hpp"
#include "rcsim/sim.hpp"

namespace rcsim {

// Built-in scenarios: "sim1" (15 agents, constant reference, 2 malicious),
// "sim2" (30 agents, stepwise reference, 3 malicious) and "takeover"
// (leaderless 15 agents driven to 42 by a colluding set).
std::vector<std::string> preset_names();

// Scenario document for a preset, in the same schema as config files.
io::json preset_document(const std::string& name);

// Parses the preset and certifies its robustness claim.
ScenarioConfig load_preset(const std::string& name);

// True iff the config carries no claim or the claim verifies over
// [t0 + T, horizon].
bool certify_claim(const ScenarioConfig& config);

}  // namespace rcsim
