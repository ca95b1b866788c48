#pragma once

#include "wolf/params.hpp"

#include <span>
#include <vector>

namespace wolf {

// Two time levels of every lumped oscillator plus the lagged suppressor
// velocities. The velocity entry is the central difference of the step
// before, so evaluating forces at step n never needs z at n + 1.
struct LumpedState {
    double z_br_prev = 0.0;
    double z_br_curr = 0.0;
    std::vector<double> z_su_prev;
    std::vector<double> z_su_curr;
    std::vector<double> z_su_vel;

    explicit LumpedState(std::size_t n_suppressors = 0)
        : z_su_prev(n_suppressors, 0.0), z_su_curr(n_suppressors, 0.0),
          z_su_vel(n_suppressors, 0.0) {}
};

// All spring and dashpot forces for one step, evaluated from states at
// the same time level. Signs follow the convention "positive pulls the
// named distributed system toward the lumped mass":
//   string_bridge  acts on the string node, -string_bridge on the bridge
//   foot_*         act on the plate, -foot_* on the bridge
//   suppressor[i]  act on the plate, -suppressor[i] on that suppressor
struct CouplingForces {
    double string_bridge = 0.0;
    double foot_left = 0.0;
    double foot_right = 0.0;
    std::vector<double> suppressor;
};

// Per-step inputs sampled from the distributed systems.
struct CouplingInputs {
    double u_at_bridge = 0.0;   // string displacement at the attach node
    double w_foot_left = 0.0;   // plate displacement under each foot
    double w_foot_right = 0.0;
    std::span<const double> w_at_su;   // plate displacement at suppressors
    std::span<const double> w_vel_at_su; // plate velocity at suppressors
};

// Fill `out` with the forces for one step. The suppressor vector is
// resized as needed; reusing one CouplingForces across steps avoids
// per-step allocation.
void compute_forces(const CouplingInputs& in, const LumpedState& lumped,
                    const BridgeParams& bridge,
                    std::span<const SuppressorParams> suppressors,
                    CouplingForces& out);

// Leapfrog update of a lumped mass under a net force:
// z_next = 2 z - z_prev + dt^2 f / m.
double step_lumped_mass(double z_prev, double z_curr, double net_force,
                        double mass, double dt);

// Advance bridge and suppressors using the forces of this step and
// refresh the lagged suppressor velocities.
void step_lumped(LumpedState& lumped, const CouplingForces& forces,
                 const BridgeParams& bridge,
                 std::span<const SuppressorParams> suppressors, double dt);

} // namespace wolf
