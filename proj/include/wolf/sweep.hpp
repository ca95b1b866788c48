#pragma once

#include "wolf/analysis.hpp"
#include "wolf/simulator.hpp"

#include <span>
#include <string>
#include <utility>
#include <vector>

namespace wolf {

// The three scenario-level indicators as one value set.
struct IndicatorTriple {
    double wolf = 0.0;
    double sustain = 0.0;
    double fidelity = 0.0;
};

// Indicator values on a rectangular grid of scenario variants. Cells are
// stored row-major, index = iy * nx() + ix. Cells whose simulation
// failed hold NaN and are flagged in `failed`.
struct HeatMap {
    std::string x_label;
    std::string y_label;
    std::vector<double> xs;
    std::vector<double> ys;
    std::vector<double> wolf;
    std::vector<double> sustain;
    std::vector<double> fidelity;
    std::vector<unsigned char> failed;

    int nx() const { return static_cast<int>(xs.size()); }
    int ny() const { return static_cast<int>(ys.size()); }
    std::size_t cell(int ix, int iy) const {
        return static_cast<std::size_t>(iy) * xs.size() + ix;
    }
};

// Reference values a cross sweep is normalized against.
struct IndicatorBaseline {
    double wolf = 0.0;
    double sustain = 0.0;
    double fidelity = 0.0;
};

enum class SweepAxis { Frequency, Mass, Damping };

// Run every note of the scenario, one at a time, and fold the
// recordings into the three indicators. `reference` supplies the
// suppressor-free spectra for the fidelity term; without it fidelity is
// NaN. This is the single evaluation path shared by the plain runs and
// all sweeps.
IndicatorTriple evaluate_indicators(const ScenarioConfig& cfg,
                                    const std::vector<Spectrum>* reference);

// Suppressor-free reference spectra of the scenario's notes.
std::vector<Spectrum> reference_spectra(const ScenarioConfig& cfg);

// Indicators as a function of the (single) suppressor position over an
// nx-by-ny grid of interior plate fractions (k + 1) / (n + 1). Cells are
// evaluated in parallel; a failed cell is recorded, not fatal.
HeatMap placement_sweep(const ScenarioConfig& cfg, int nx, int ny);

// Beating strength of the wolf note as one suppressor parameter varies.
// Returns (value, indicator) pairs in the order given; failed runs yield
// NaN. Invalid parameter values are rejected up front.
std::vector<std::pair<double, double>>
sensitivity_scan(const ScenarioConfig& cfg, SweepAxis axis,
                 std::span<const double> values);

// Two-suppressor grid: the first suppressor moves along y at fixed
// x1_fixed, the second along x at fixed y2_fixed. Cell values are
// relative changes (J - baseline) / |baseline| for each indicator.
HeatMap cross_sweep_two(const ScenarioConfig& cfg, double x1_fixed,
                        double y2_fixed, int nx, int ny,
                        const IndicatorBaseline& baseline);

} // namespace wolf
