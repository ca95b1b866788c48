#pragma once

#include "wolf/coupling.hpp"
#include "wolf/excitation.hpp"
#include "wolf/params.hpp"

#include <vector>

namespace wolf {

enum class ExcitationKind { Pluck, Bow };

// Everything needed to simulate one scenario over a set of notes. The
// string length is replaced per note by the entries of note_lengths.
struct ScenarioConfig {
    StringParams string;
    PlateParams plate;
    BridgeParams bridge;
    std::vector<SuppressorParams> suppressors;
    ExcitationKind excitation = ExcitationKind::Pluck;
    PluckParams pluck;
    BowParams bow;
    SimGridConfig sim;
    IndicatorParams indicators;
    std::vector<double> note_lengths; // speaking lengths [m]
    int wolf_note = 0;                // index into note_lengths

    void validate() const;
};

// Time series captured while simulating one note. Sample k holds the
// state after step k + 1, i.e. at time (k + 1) dt.
struct Recording {
    std::vector<double> body;      // plate displacement at the pickup point
    std::vector<double> string;    // string displacement at the excitation point
    std::vector<double> bow_force; // applied bow force, empty for plucked runs
    double sample_rate = 0.0;      // 1 / dt [Hz]
    int note_index = 0;
};

// Simulate one note from silence. Throws ValidationError for impossible
// setups and SimulationError (with note and step) if the state blows up.
Recording run_simulation(const ScenarioConfig& cfg, int note_index);

// Simulate every note of the scenario, in parallel across notes. The
// result order matches note_lengths regardless of scheduling.
std::vector<Recording> run_all_notes(const ScenarioConfig& cfg);

} // namespace wolf
