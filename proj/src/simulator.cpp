#include "wolf/simulator.hpp"

#include "wolf/errors.hpp"
#include "wolf/plate_fdtd.hpp"
#include "wolf/string_fdtd.hpp"

#include <array>
#include <cstddef>
#include <sstream>
#include <string>

namespace wolf {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw ValidationError(what);
}

// A node pair on the plate resolved from a fractional position.
struct PlateNode {
    int px = 0;
    int py = 0;
};

PlateNode resolve_plate_node(Position frac, int nodes) {
    return {fraction_to_index(frac.x, nodes), fraction_to_index(frac.y, nodes)};
}

void require_support_interior(const BilinearWeights& w, int intervals,
                              std::size_t su_index) {
    const auto corner_ok = [&](int px, int py, double weight) {
        return weight == 0.0 ||
               (px >= 1 && px <= intervals - 1 && py >= 1 && py <= intervals - 1);
    };
    const bool ok = corner_ok(w.px0, w.py0, w.w00) &&
                    corner_ok(w.px0, w.py0 + 1, w.w01) &&
                    corner_ok(w.px0 + 1, w.py0, w.w10) &&
                    corner_ok(w.px0 + 1, w.py0 + 1, w.w11);
    if (!ok) {
        std::ostringstream os;
        os << "suppressor " << su_index + 1
           << " sits too close to the clamped plate edge";
        throw ValidationError(os.str());
    }
}

} // namespace

void ScenarioConfig::validate() const {
    string.validate();
    plate.validate();
    bridge.validate();
    for (const auto& su : suppressors) su.validate();
    sim.validate();
    indicators.validate(sim.total_time);
    if (excitation == ExcitationKind::Pluck) {
        pluck.validate();
    } else {
        bow.validate();
    }
    require(!note_lengths.empty(), "notes.lengths must not be empty");
    for (double l : note_lengths)
        require(l > 0.0, "notes.lengths entries must be > 0");
    require(wolf_note >= 0 && wolf_note < static_cast<int>(note_lengths.size()),
            "notes.wolf_note out of range");
}

Recording run_simulation(const ScenarioConfig& cfg, int note_index) {
    cfg.validate();
    require(note_index >= 0 &&
                note_index < static_cast<int>(cfg.note_lengths.size()),
            "note index out of range");

    StringParams sp = cfg.string;
    sp.length = cfg.note_lengths[note_index];
    const StringCoeffs sc = derive_string_coeffs(sp, cfg.sim.dt);
    const PlateCoeffs pc = derive_plate_coeffs(cfg.plate, cfg.sim.dt);
    const double dt = cfg.sim.dt;

    const int i_exc = fraction_to_index(cfg.sim.exc_point, sc.nodes());
    const int i_br = fraction_to_index(cfg.bridge.string_attach, sc.nodes());
    const bool bowed = cfg.excitation == ExcitationKind::Bow;
    if (bowed) {
        require(i_exc >= 2 && i_exc <= sc.intervals - 2,
                "bow point too close to the string ends for the spreading");
    }

    const PlateNode foot_l = resolve_plate_node(cfg.bridge.foot_left, pc.nodes());
    const PlateNode foot_r = resolve_plate_node(cfg.bridge.foot_right, pc.nodes());
    const PlateNode pickup = resolve_plate_node(cfg.sim.rec_point, pc.nodes());

    std::vector<BilinearWeights> su_w;
    su_w.reserve(cfg.suppressors.size());
    for (std::size_t i = 0; i < cfg.suppressors.size(); ++i) {
        BilinearWeights w = bilinear_weights(cfg.suppressors[i].position,
                                             pc.intervals);
        require_support_interior(w, pc.intervals, i);
        su_w.push_back(w);
    }

    StringState string(sc.intervals);
    PlateState plate(pc.intervals);
    LumpedState lumped(cfg.suppressors.size());
    BowPhase bow_phase;
    CouplingForces forces;
    CouplingInputs inputs;
    std::vector<double> w_at_su(cfg.suppressors.size());
    std::vector<double> w_vel_at_su(cfg.suppressors.size());

    const long n_steps = cfg.sim.steps();
    Recording rec;
    rec.note_index = note_index;
    rec.sample_rate = 1.0 / dt;
    rec.body.reserve(n_steps);
    rec.string.reserve(n_steps);
    if (bowed) rec.bow_force.reserve(n_steps);

    std::array<PointLoad, 4> string_loads;
    std::vector<PlateLoad> plate_loads;
    plate_loads.reserve(2 + 4 * cfg.suppressors.size());

    try {
        for (long n = 0; n < n_steps; ++n) {
            // Excitation force at time n dt.
            std::size_t n_string_loads = 0;
            double f_bow = 0.0;
            if (bowed) {
                f_bow = bow_force(string, sc, cfg.bow, i_exc, bow_phase);
                const auto spread = spread_bow(f_bow, i_exc);
                for (const auto& l : spread) string_loads[n_string_loads++] = l;
            } else {
                const double f = pluck_force(n * dt, cfg.pluck);
                if (f != 0.0) string_loads[n_string_loads++] = {i_exc, f};
            }

            // Coupling forces from the states at time n.
            inputs.u_at_bridge = string.at(i_br);
            inputs.w_foot_left = plate.at(foot_l.px, foot_l.py);
            inputs.w_foot_right = plate.at(foot_r.px, foot_r.py);
            for (std::size_t i = 0; i < su_w.size(); ++i) {
                w_at_su[i] = sample_bilinear(plate, su_w[i]);
                w_vel_at_su[i] = plate_velocity_at(plate, su_w[i], dt);
            }
            inputs.w_at_su = w_at_su;
            inputs.w_vel_at_su = w_vel_at_su;
            compute_forces(inputs, lumped, cfg.bridge, cfg.suppressors, forces);

            string_loads[n_string_loads++] = {i_br, forces.string_bridge};

            plate_loads.clear();
            plate_loads.push_back({foot_l.px, foot_l.py, forces.foot_left});
            plate_loads.push_back({foot_r.px, foot_r.py, forces.foot_right});
            for (std::size_t i = 0; i < su_w.size(); ++i) {
                PlateLoad spread[4];
                const int k = spread_bilinear(su_w[i], forces.suppressor[i],
                                              spread);
                plate_loads.insert(plate_loads.end(), spread, spread + k);
            }

            // Advance every subsystem to time n + 1.
            step_string(string, sc,
                        {string_loads.data(), n_string_loads});
            step_plate(plate, pc, plate_loads);
            step_lumped(lumped, forces, cfg.bridge, cfg.suppressors, dt);

            rec.body.push_back(plate.at(pickup.px, pickup.py));
            rec.string.push_back(string.at(i_exc));
            if (bowed) rec.bow_force.push_back(f_bow);
        }
    } catch (const SimulationError& e) {
        std::ostringstream os;
        os << "note " << note_index + 1 << ": " << e.what();
        throw SimulationError(os.str());
    }

    return rec;
}

std::vector<Recording> run_all_notes(const ScenarioConfig& cfg) {
    cfg.validate();
    const int n = static_cast<int>(cfg.note_lengths.size());

    // Fail fast on setups that cannot even be gridded, so configuration
    // mistakes surface as ValidationError before any heavy work.
    for (int i = 0; i < n; ++i) {
        StringParams sp = cfg.string;
        sp.length = cfg.note_lengths[i];
        const StringCoeffs sc = derive_string_coeffs(sp, cfg.sim.dt);
        fraction_to_index(cfg.sim.exc_point, sc.nodes());
        fraction_to_index(cfg.bridge.string_attach, sc.nodes());
    }

    std::vector<Recording> out(n);
    std::vector<std::string> failures(n);

#pragma omp parallel for schedule(dynamic) if (n > 1)
    for (int i = 0; i < n; ++i) {
        try {
            out[i] = run_simulation(cfg, i);
        } catch (const std::exception& e) {
            failures[i] = e.what();
        }
    }

    for (const auto& f : failures) {
        if (!f.empty()) throw SimulationError(f);
    }
    return out;
}

} // namespace wolf
