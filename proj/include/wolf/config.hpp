#pragma once

#include "wolf/simulator.hpp"

#include <string>
#include <vector>

namespace wolf {

// Factory scenarios, one per canonical experiment:
//   PLUCK-0S  plucked scale, no suppressor
//   PLUCK-1S  plucked scale, one suppressor at (0.70, 0.49)
//   EXTRA-492 plucked scale plus the extra 10.4 cm string, no suppressor
//   BOW-0S    bowed scale, no suppressor
//   BOW-1S    bowed scale, one suppressor at (0.19, 0.49)
//   BOW-2S    bowed scale, two half-mass suppressors
std::vector<std::string> preset_names();
ScenarioConfig scenario_preset(const std::string& name);

// Baseline parameter set shared by every preset, with the note table of
// the chosen excitation.
ScenarioConfig default_scenario(ExcitationKind kind);

// Parse a JSON scenario file. The file may start from a preset via a
// top-level "scenario" key; any other keys override individual fields.
// Unknown keys fail with the offending path. `wolf_note` is 1-based in
// the file, matching how the note tables are numbered.
ScenarioConfig load_config(const std::string& path);

// Serialize a config in the load_config schema (used to record the
// effective configuration next to run outputs).
std::string scenario_to_json(const ScenarioConfig& cfg);

} // namespace wolf
