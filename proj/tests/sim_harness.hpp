// Test-side composition of the public building blocks into the same
// five-phase loop the production simulator runs. The simulator tests
// check this loop reproduces run_simulation bit for bit; the energy test
// then evaluates the discrete energy of the very same loop.
#pragma once

#include "wolf/coupling.hpp"
#include "wolf/excitation.hpp"
#include "wolf/params.hpp"
#include "wolf/plate_fdtd.hpp"
#include "wolf/simulator.hpp"
#include "wolf/string_fdtd.hpp"

#include <array>
#include <vector>

namespace harness {

struct ComposedSim {
    wolf::ScenarioConfig cfg;
    wolf::StringCoeffs sc;
    wolf::PlateCoeffs pc;
    wolf::StringState string;
    wolf::PlateState plate;
    wolf::LumpedState lumped;
    wolf::BowPhase bow_phase;
    wolf::CouplingForces forces;
    std::vector<wolf::BilinearWeights> su_w;
    std::vector<double> w_at_su, w_vel_at_su;
    int i_exc = 0, i_br = 0;
    int foot_l_x = 0, foot_l_y = 0, foot_r_x = 0, foot_r_y = 0;
    int pickup_x = 0, pickup_y = 0;
    long n = 0;
    double last_bow_force = 0.0;

    ComposedSim(const wolf::ScenarioConfig& config, int note)
        : cfg(config),
          sc([&] {
              wolf::StringParams sp = config.string;
              sp.length = config.note_lengths.at(note);
              return wolf::derive_string_coeffs(sp, config.sim.dt);
          }()),
          pc(wolf::derive_plate_coeffs(config.plate, config.sim.dt)),
          string(sc.intervals), plate(pc.intervals),
          lumped(config.suppressors.size()),
          w_at_su(config.suppressors.size()),
          w_vel_at_su(config.suppressors.size()) {
        i_exc = wolf::fraction_to_index(cfg.sim.exc_point, sc.nodes());
        i_br = wolf::fraction_to_index(cfg.bridge.string_attach, sc.nodes());
        foot_l_x = wolf::fraction_to_index(cfg.bridge.foot_left.x, pc.nodes());
        foot_l_y = wolf::fraction_to_index(cfg.bridge.foot_left.y, pc.nodes());
        foot_r_x = wolf::fraction_to_index(cfg.bridge.foot_right.x, pc.nodes());
        foot_r_y = wolf::fraction_to_index(cfg.bridge.foot_right.y, pc.nodes());
        pickup_x = wolf::fraction_to_index(cfg.sim.rec_point.x, pc.nodes());
        pickup_y = wolf::fraction_to_index(cfg.sim.rec_point.y, pc.nodes());
        for (const auto& su : cfg.suppressors) {
            su_w.push_back(wolf::bilinear_weights(su.position, pc.intervals));
        }
    }

    void step() {
        std::array<wolf::PointLoad, 4> string_loads;
        std::size_t n_string_loads = 0;
        last_bow_force = 0.0;
        if (cfg.excitation == wolf::ExcitationKind::Bow) {
            last_bow_force =
                wolf::bow_force(string, sc, cfg.bow, i_exc, bow_phase);
            for (const auto& l : wolf::spread_bow(last_bow_force, i_exc)) {
                string_loads[n_string_loads++] = l;
            }
        } else {
            const double f = wolf::pluck_force(n * cfg.sim.dt, cfg.pluck);
            if (f != 0.0) string_loads[n_string_loads++] = {i_exc, f};
        }

        wolf::CouplingInputs inputs;
        inputs.u_at_bridge = string.at(i_br);
        inputs.w_foot_left = plate.at(foot_l_x, foot_l_y);
        inputs.w_foot_right = plate.at(foot_r_x, foot_r_y);
        for (std::size_t i = 0; i < su_w.size(); ++i) {
            w_at_su[i] = wolf::sample_bilinear(plate, su_w[i]);
            w_vel_at_su[i] = wolf::plate_velocity_at(plate, su_w[i], cfg.sim.dt);
        }
        inputs.w_at_su = w_at_su;
        inputs.w_vel_at_su = w_vel_at_su;
        wolf::compute_forces(inputs, lumped, cfg.bridge, cfg.suppressors,
                             forces);

        string_loads[n_string_loads++] = {i_br, forces.string_bridge};

        std::vector<wolf::PlateLoad> plate_loads;
        plate_loads.push_back({foot_l_x, foot_l_y, forces.foot_left});
        plate_loads.push_back({foot_r_x, foot_r_y, forces.foot_right});
        for (std::size_t i = 0; i < su_w.size(); ++i) {
            wolf::PlateLoad spread[4];
            const int k =
                wolf::spread_bilinear(su_w[i], forces.suppressor[i], spread);
            plate_loads.insert(plate_loads.end(), spread, spread + k);
        }

        wolf::step_string(string, sc, {string_loads.data(), n_string_loads});
        wolf::step_plate(plate, pc, plate_loads);
        wolf::step_lumped(lumped, forces, cfg.bridge, cfg.suppressors,
                          cfg.sim.dt);
        ++n;
    }

    double body() const { return plate.at(pickup_x, pickup_y); }
    double string_at_exc() const { return string.at(i_exc); }

    // Discrete energy of the state pair (curr, prev): kinetic terms from
    // the level difference, elastic terms as symmetric cross products of
    // the two levels. Exactly conserved by the undamped unforced scheme.
    double energy() const {
        const double dt = cfg.sim.dt;
        const double inv2dt2 = 1.0 / (2.0 * dt * dt);
        double h = 0.0;

        // String: point masses rho A dx at the moving nodes.
        {
            const double rho_a = cfg.string.density * cfg.string.area;
            const int m = sc.intervals;
            double kin = 0.0, ten = 0.0, bend = 0.0;
            for (int p = 1; p < m; ++p) {
                const double d = string.at(p) - string.at_prev(p);
                kin += d * d;
            }
            for (int p = 0; p < m; ++p) {
                ten += (string.at(p + 1) - string.at(p)) *
                       (string.at_prev(p + 1) - string.at_prev(p));
            }
            for (int p = 1; p < m; ++p) {
                const double c2 =
                    string.at(p + 1) - 2.0 * string.at(p) + string.at(p - 1);
                const double p2 = string.at_prev(p + 1) -
                                  2.0 * string.at_prev(p) +
                                  string.at_prev(p - 1);
                bend += c2 * p2;
            }
            const double ei =
                cfg.string.youngs_modulus * cfg.string.moment_inertia;
            h += rho_a * sc.dx * inv2dt2 * kin;
            h += 0.5 * cfg.string.tension / sc.dx * ten;
            h += 0.5 * ei / (sc.dx * sc.dx * sc.dx) * bend;
        }

        // Plate: point masses rho h dx^2.
        {
            const double rho_h = cfg.plate.density * cfg.plate.thickness;
            const int m = pc.intervals;
            double kin = 0.0, mem = 0.0, bend = 0.0;
            for (int px = 1; px < m; ++px) {
                for (int py = 1; py < m; ++py) {
                    const double d = plate.at(px, py) - plate.at_prev(px, py);
                    kin += d * d;
                }
            }
            for (int px = 0; px < m; ++px) {
                for (int py = 0; py <= m; ++py) {
                    mem += (plate.at(px + 1, py) - plate.at(px, py)) *
                           (plate.at_prev(px + 1, py) - plate.at_prev(px, py));
                }
            }
            for (int px = 0; px <= m; ++px) {
                for (int py = 0; py < m; ++py) {
                    mem += (plate.at(px, py + 1) - plate.at(px, py)) *
                           (plate.at_prev(px, py + 1) - plate.at_prev(px, py));
                }
            }
            const auto lap = [&](int px, int py, bool prev_level) {
                const auto v = [&](int ax, int ay) {
                    return prev_level ? plate.at_prev(ax, ay) : plate.at(ax, ay);
                };
                return v(px + 1, py) + v(px - 1, py) + v(px, py + 1) +
                       v(px, py - 1) - 4.0 * v(px, py);
            };
            for (int px = 1; px < m; ++px) {
                for (int py = 1; py < m; ++py) {
                    bend += lap(px, py, false) * lap(px, py, true);
                }
            }
            h += rho_h * pc.dx * pc.dx * inv2dt2 * kin;
            h += 0.5 * cfg.plate.tension * mem;
            h += 0.5 * pc.bending_rigidity / (pc.dx * pc.dx) * bend;
        }

        // Lumped masses and the coupling springs.
        {
            const double dbr = lumped.z_br_curr - lumped.z_br_prev;
            h += cfg.bridge.mass * inv2dt2 * dbr * dbr;
            for (std::size_t i = 0; i < cfg.suppressors.size(); ++i) {
                const double d = lumped.z_su_curr[i] - lumped.z_su_prev[i];
                h += cfg.suppressors[i].mass * inv2dt2 * d * d;
            }

            h += 0.5 * cfg.bridge.k_string *
                 (lumped.z_br_curr - string.at(i_br)) *
                 (lumped.z_br_prev - string.at_prev(i_br));
            h += 0.5 * cfg.bridge.k_left *
                 (lumped.z_br_curr - plate.at(foot_l_x, foot_l_y)) *
                 (lumped.z_br_prev - plate.at_prev(foot_l_x, foot_l_y));
            h += 0.5 * cfg.bridge.k_right *
                 (lumped.z_br_curr - plate.at(foot_r_x, foot_r_y)) *
                 (lumped.z_br_prev - plate.at_prev(foot_r_x, foot_r_y));
            for (std::size_t i = 0; i < cfg.suppressors.size(); ++i) {
                h += 0.5 * cfg.suppressors[i].stiffness() *
                     (lumped.z_su_curr[i] - wolf::sample_bilinear(plate, su_w[i])) *
                     (lumped.z_su_prev[i] -
                      wolf::sample_bilinear_prev(plate, su_w[i]));
            }
        }
        return h;
    }
};

} // namespace harness
