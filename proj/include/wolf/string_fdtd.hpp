#pragma once

#include "wolf/params.hpp"

#include <span>
#include <vector>

namespace wolf {

// Transverse displacement of the string on a uniform grid. `curr` is the
// newest time level, `prev` the one before. Arrays hold the M + 1
// physical nodes plus two ghost nodes per side (length M + 5); physical
// node p lives at array index p + kGhostLayers.
struct StringState {
    explicit StringState(int intervals_)
        : prev(intervals_ + 5, 0.0), curr(intervals_ + 5, 0.0),
          intervals(intervals_) {}

    std::vector<double> prev;
    std::vector<double> curr;
    int intervals = 0;
    long time_index = 0;

    double at(int physical_node) const { return curr[physical_node + kGhostLayers]; }
    double at_prev(int physical_node) const { return prev[physical_node + kGhostLayers]; }
};

// External force applied at one physical node for the current step.
struct PointLoad {
    int node = 0;       // physical node index, must be interior
    double force = 0.0; // [N]
};

// Pin the endpoints and fill the ghost nodes by odd reflection
// (simply supported ends: zero displacement, zero curvature).
void apply_string_bcs(StringState& s);

// Homogeneous update numerator of the explicit scheme at one node:
// everything except loads, before division by (1 + tau). Exposed so the
// bow model can invert the update exactly.
double string_scheme_bracket(const StringState& s, const StringCoeffs& c,
                             int physical_node);

// Backward-difference velocity at a node, (U^n - U^{n-1}) / dt.
double string_velocity_at(const StringState& s, int physical_node, double dt);

// Advance one time step: uniform stencil over the interior, point loads
// added, endpoints and ghosts re-applied. Throws SimulationError if any
// new value is non-finite or larger than kMaxDisplacement. Runs the
// interior loop in parallel once the grid is large enough to pay for it.
void step_string(StringState& s, const StringCoeffs& c,
                 std::span<const PointLoad> loads);

namespace reference {
// Serial twin of step_string, kept for equivalence tests and benchmarks.
// Must produce bit-identical states.
void step_string(StringState& s, const StringCoeffs& c,
                 std::span<const PointLoad> loads);
} // namespace reference

} // namespace wolf
