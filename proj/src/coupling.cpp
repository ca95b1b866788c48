#include "wolf/coupling.hpp"

#include <cassert>

namespace wolf {

void compute_forces(const CouplingInputs& in, const LumpedState& lumped,
                    const BridgeParams& bridge,
                    std::span<const SuppressorParams> suppressors,
                    CouplingForces& out) {
    out.string_bridge = bridge.k_string * (lumped.z_br_curr - in.u_at_bridge);
    out.foot_left = bridge.k_left * (lumped.z_br_curr - in.w_foot_left);
    out.foot_right = bridge.k_right * (lumped.z_br_curr - in.w_foot_right);

    assert(in.w_at_su.size() == suppressors.size());
    assert(in.w_vel_at_su.size() == suppressors.size());
    out.suppressor.resize(suppressors.size());
    for (std::size_t i = 0; i < suppressors.size(); ++i) {
        const auto& su = suppressors[i];
        out.suppressor[i] =
            su.stiffness() * (lumped.z_su_curr[i] - in.w_at_su[i]) +
            su.damping * (lumped.z_su_vel[i] - in.w_vel_at_su[i]);
    }
}

double step_lumped_mass(double z_prev, double z_curr, double net_force,
                        double mass, double dt) {
    return 2.0 * z_curr - z_prev + dt * dt * net_force / mass;
}

void step_lumped(LumpedState& lumped, const CouplingForces& forces,
                 const BridgeParams& bridge,
                 std::span<const SuppressorParams> suppressors, double dt) {
    const double br_net =
        -(forces.string_bridge + forces.foot_left + forces.foot_right);
    const double z_br_next = step_lumped_mass(lumped.z_br_prev,
                                              lumped.z_br_curr, br_net,
                                              bridge.mass, dt);
    lumped.z_br_prev = lumped.z_br_curr;
    lumped.z_br_curr = z_br_next;

    for (std::size_t i = 0; i < suppressors.size(); ++i) {
        const double z_next =
            step_lumped_mass(lumped.z_su_prev[i], lumped.z_su_curr[i],
                             -forces.suppressor[i], suppressors[i].mass, dt);
        lumped.z_su_vel[i] = (z_next - lumped.z_su_prev[i]) / (2.0 * dt);
        lumped.z_su_prev[i] = lumped.z_su_curr[i];
        lumped.z_su_curr[i] = z_next;
    }
}

} // namespace wolf
