#pragma once

#include "wolf/params.hpp"

#include <span>
#include <vector>

namespace wolf {

// Transverse displacement of the square plate, stored row-major with two
// ghost layers around the (M + 1) x (M + 1) physical nodes. Physical
// node (px, py) lives at array index (px + kGhostLayers) * stride() +
// (py + kGhostLayers).
struct PlateState {
    explicit PlateState(int intervals_)
        : prev((intervals_ + 5) * std::size_t(intervals_ + 5), 0.0),
          curr((intervals_ + 5) * std::size_t(intervals_ + 5), 0.0),
          intervals(intervals_) {}

    std::vector<double> prev;
    std::vector<double> curr;
    int intervals = 0;
    long time_index = 0;

    int stride() const { return intervals + 5; }
    std::size_t index(int px, int py) const {
        return (px + kGhostLayers) * std::size_t(stride()) + (py + kGhostLayers);
    }
    double at(int px, int py) const { return curr[index(px, py)]; }
    double at_prev(int px, int py) const { return prev[index(px, py)]; }
};

// External force applied at one physical node for the current step.
struct PlateLoad {
    int px = 0; // physical node indices, must be interior
    int py = 0;
    double force = 0.0; // [N]
};

// Interpolation stencil for an off-grid point: base node and the four
// cell-corner weights. The same weights serve sampling and force
// spreading, which keeps the two operations exact adjoints.
struct BilinearWeights {
    int px0 = 0;
    int py0 = 0;
    double w00 = 0.0, w01 = 0.0, w10 = 0.0, w11 = 0.0;
};

BilinearWeights bilinear_weights(Position frac, int intervals);

// Displacement of the newest / previous time level at an off-grid point.
double sample_bilinear(const PlateState& s, const BilinearWeights& w);
double sample_bilinear_prev(const PlateState& s, const BilinearWeights& w);

// Backward-difference velocity at an off-grid point.
double plate_velocity_at(const PlateState& s, const BilinearWeights& w, double dt);

// Distribute a point force over the cell corners. Corners with exactly
// zero weight are dropped, so an on-node point degenerates to a single
// load. Returns the number of loads written to `out` (up to 4).
int spread_bilinear(const BilinearWeights& w, double force, PlateLoad out[4]);

// Clamp all four edges to zero and fill the ghost layers by odd
// reflection (simply supported edges).
void apply_plate_bcs(PlateState& s);

// Advance one time step, same contract as step_string. The row loop runs
// in parallel once the grid is large enough to pay for it.
void step_plate(PlateState& s, const PlateCoeffs& c,
                std::span<const PlateLoad> loads);

namespace reference {
// Serial twin of step_plate, kept for equivalence tests and benchmarks.
// Must produce bit-identical states.
void step_plate(PlateState& s, const PlateCoeffs& c,
                std::span<const PlateLoad> loads);
} // namespace reference

} // namespace wolf
