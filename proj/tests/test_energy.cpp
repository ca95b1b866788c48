#include "sim_harness.hpp"

#include "wolf/config.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

using namespace wolf;
using harness::ComposedSim;

namespace {

// Coupled scenario used by the energy checks: one plucked note in the
// beating region, one suppressor off any grid node so all four bilinear
// corners carry weight.
ScenarioConfig energy_config() {
    ScenarioConfig cfg = default_scenario(ExcitationKind::Pluck);
    cfg.note_lengths = {0.197};
    cfg.wolf_note = 0;
    SuppressorParams su;
    su.position = {0.55, 0.47};
    su.damping = 0.0;
    cfg.suppressors.push_back(su);
    cfg.sim.total_time = 0.2;
    cfg.indicators.t_star = 0.1;
    return cfg;
}

struct EnergyTrace {
    std::vector<double> h;  // sampled discrete energy
    double su_peak = 0.0;   // largest suppressor excursion seen
};

EnergyTrace trace_energy(const ScenarioConfig& cfg, long steps,
                         long first_sample, long stride) {
    ComposedSim sim(cfg, 0);
    EnergyTrace out;
    for (long k = 0; k < steps; ++k) {
        sim.step();
        if (!sim.lumped.z_su_curr.empty()) {
            out.su_peak =
                std::max(out.su_peak, std::fabs(sim.lumped.z_su_curr[0]));
        }
        if (k >= first_sample && (k - first_sample) % stride == 0) {
            out.h.push_back(sim.energy());
        }
    }
    return out;
}

} // namespace

TEST_SUITE("energy") {

TEST_CASE("undamped coupled system conserves the discrete energy") {
    ScenarioConfig cfg = energy_config();
    const long steps = cfg.sim.steps();

    // Sampling starts well after the pluck pulse has ended.
    const long first = 1200;
    const EnergyTrace tr = trace_energy(cfg, steps, first, 400);
    REQUIRE(tr.h.size() > 50);

    const double h0 = tr.h.front();
    REQUIRE(h0 > 0.0);
    for (double h : tr.h) {
        CHECK(std::fabs(h - h0) <= 1.0e-9 * h0);
    }
}

TEST_CASE("velocity damping makes the energy fall monotonically") {
    ScenarioConfig cfg = energy_config();
    cfg.string.damping = 2.0;
    cfg.plate.damping = 8.0;

    const EnergyTrace tr = trace_energy(cfg, cfg.sim.steps(), 1200, 400);
    REQUIRE(tr.h.size() > 50);
    REQUIRE(tr.h.front() > 0.0);

    for (std::size_t i = 1; i < tr.h.size(); ++i) {
        CHECK(tr.h[i] <= tr.h[i - 1] * (1.0 + 1.0e-10));
    }
    CHECK(tr.h.back() < 0.8 * tr.h.front());
}

TEST_CASE("the suppressor dashpot drains energy") {
    ScenarioConfig cfg = energy_config();
    cfg.suppressors[0].damping = 2.1;

    const EnergyTrace tr = trace_energy(cfg, cfg.sim.steps(), 1200, 400);
    REQUIRE(tr.h.front() > 0.0);
    CHECK(tr.su_peak > 0.0);
    CHECK(tr.h.back() < tr.h.front() * (1.0 - 1.0e-6));
}

TEST_CASE("string amplitude stays bounded over a long free run") {
    StringParams p; // production string, full speaking length
    const StringCoeffs c = derive_string_coeffs(p, 5.7e-6);
    StringState s(c.intervals);

    const auto fill = [&] {
        for (int k = 1; k < c.intervals; ++k) {
            const double x = static_cast<double>(k) / c.intervals;
            s.curr[k + kGhostLayers] = 1.0e-4 * std::sin(std::numbers::pi * x);
        }
        apply_string_bcs(s);
    };
    fill();
    std::swap(s.prev, s.curr);
    fill();

    const long n_steps = 50000;
    const long window = 4000;
    double a_early = 0.0, a_late = 0.0;
    for (long k = 0; k < n_steps; ++k) {
        step_string(s, c, {});
        double peak = 0.0;
        for (int i = 0; i <= c.intervals; ++i) {
            peak = std::max(peak, std::fabs(s.at(i)));
        }
        if (k < window) a_early = std::max(a_early, peak);
        if (k >= n_steps - window) a_late = std::max(a_late, peak);
    }

    REQUIRE(a_early > 0.0);
    CHECK(a_late > 0.0);
    CHECK(a_late <= a_early * std::pow(1.0 + 1.0e-6, double(n_steps)));
}

TEST_CASE("plate amplitude stays bounded over a long free run") {
    PlateParams p;
    const PlateCoeffs c = derive_plate_coeffs(p, 5.7e-6);
    PlateState s(c.intervals);

    const auto fill = [&] {
        for (int px = 1; px < c.intervals; ++px) {
            for (int py = 1; py < c.intervals; ++py) {
                const double x = static_cast<double>(px) / c.intervals;
                const double y = static_cast<double>(py) / c.intervals;
                s.curr[s.index(px, py)] = 1.0e-4 *
                                          std::sin(std::numbers::pi * x) *
                                          std::sin(std::numbers::pi * y);
            }
        }
        apply_plate_bcs(s);
    };
    fill();
    std::swap(s.prev, s.curr);
    fill();

    const long n_steps = 30000;
    const long window = 4000;
    double a_early = 0.0, a_late = 0.0;
    for (long k = 0; k < n_steps; ++k) {
        step_plate(s, c, {});
        double peak = 0.0;
        for (int px = 0; px <= c.intervals; ++px) {
            for (int py = 0; py <= c.intervals; ++py) {
                peak = std::max(peak, std::fabs(s.at(px, py)));
            }
        }
        if (k < window) a_early = std::max(a_early, peak);
        if (k >= n_steps - window) a_late = std::max(a_late, peak);
    }

    REQUIRE(a_early > 0.0);
    CHECK(a_late > 0.0);
    CHECK(a_late <= a_early * std::pow(1.0 + 1.0e-6, double(n_steps)));
}

} // TEST_SUITE
