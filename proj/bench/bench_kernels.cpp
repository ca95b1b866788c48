// Micro-benchmark of the two grid kernels: the OpenMP path against the
// serial reference, over sizes around the parallel threshold, plus an
// end-to-end single-note run. Also asserts the two paths stay
// bit-identical, which is the contract the unit tests rely on.

#include "wolf/config.hpp"
#include "wolf/plate_fdtd.hpp"
#include "wolf/simulator.hpp"
#include "wolf/string_fdtd.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <numbers>
#include <vector>

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

wolf::StringState make_string_state(int m) {
    wolf::StringState s(m);
    const auto fill = [&] {
        for (int p = 1; p < m; ++p) {
            const double x = static_cast<double>(p) / m;
            s.curr[p + wolf::kGhostLayers] = std::sin(std::numbers::pi * x);
        }
        wolf::apply_string_bcs(s);
    };
    fill();
    std::swap(s.prev, s.curr);
    fill();
    return s;
}

wolf::PlateState make_plate_state(int m) {
    wolf::PlateState s(m);
    const auto fill = [&] {
        for (int px = 1; px < m; ++px) {
            for (int py = 1; py < m; ++py) {
                const double x = static_cast<double>(px) / m;
                const double y = static_cast<double>(py) / m;
                s.curr[s.index(px, py)] = std::sin(std::numbers::pi * x) *
                                          std::sin(std::numbers::pi * y);
            }
        }
        wolf::apply_plate_bcs(s);
    };
    fill();
    std::swap(s.prev, s.curr);
    fill();
    return s;
}

bool same_state(const std::vector<double>& a, const std::vector<double>& b) {
    return a.size() == b.size() &&
           std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0;
}

void bench_string(int m, long steps) {
    wolf::StringCoeffs c;
    c.intervals = m;
    c.lambda = 0.5;
    c.mu = 0.1;
    c.tau = 1.0e-4;
    c.force_scale = 1.0;
    c.dt = 1.0e-5;

    wolf::StringState serial = make_string_state(m);
    wolf::StringState parallel = serial;

    auto t0 = Clock::now();
    for (long k = 0; k < steps; ++k) wolf::reference::step_string(serial, c, {});
    const double t_serial = seconds_since(t0);

    t0 = Clock::now();
    for (long k = 0; k < steps; ++k) wolf::step_string(parallel, c, {});
    const double t_parallel = seconds_since(t0);

    const bool equal = same_state(serial.curr, parallel.curr) &&
                       same_state(serial.prev, parallel.prev);
    const double rate = (m - 1.0) * steps / t_parallel / 1.0e6;
    std::printf("string  %8d nodes  %6ld steps  serial %8.1f ms  omp %8.1f ms"
                "  x%.2f  %8.1f Mnode/s  %s\n",
                m + 1, steps, t_serial * 1e3, t_parallel * 1e3,
                t_serial / t_parallel, rate, equal ? "bit-equal" : "MISMATCH");
    if (!equal) std::exit(1);
}

void bench_plate(int m, long steps) {
    wolf::PlateCoeffs c;
    c.intervals = m;
    c.lambda = 0.2;
    c.mu = 0.03;
    c.tau = 1.0e-4;
    c.force_scale = 1.0;
    c.dt = 1.0e-5;

    wolf::PlateState serial = make_plate_state(m);
    wolf::PlateState parallel = serial;

    auto t0 = Clock::now();
    for (long k = 0; k < steps; ++k) wolf::reference::step_plate(serial, c, {});
    const double t_serial = seconds_since(t0);

    t0 = Clock::now();
    for (long k = 0; k < steps; ++k) wolf::step_plate(parallel, c, {});
    const double t_parallel = seconds_since(t0);

    const bool equal = same_state(serial.curr, parallel.curr) &&
                       same_state(serial.prev, parallel.prev);
    const double sites = (m - 1.0) * (m - 1.0);
    const double rate = sites * steps / t_parallel / 1.0e6;
    std::printf("plate   %4d x %-4d     %6ld steps  serial %8.1f ms  omp %8.1f ms"
                "  x%.2f  %8.1f Mnode/s  %s\n",
                m + 1, m + 1, steps, t_serial * 1e3, t_parallel * 1e3,
                t_serial / t_parallel, rate, equal ? "bit-equal" : "MISMATCH");
    if (!equal) std::exit(1);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Kernel benchmark: serial reference vs OpenMP path"};
    long string_steps = 2000;
    long plate_steps = 200;
    double note_seconds = 0.3;
    app.add_option("--string-steps", string_steps, "steps per string size");
    app.add_option("--plate-steps", plate_steps, "steps per plate size");
    app.add_option("--note-seconds", note_seconds,
                   "length of the end-to-end note run (0 skips it)");
    CLI11_PARSE(app, argc, argv);

    // Sizes straddle the threshold where the kernels go parallel
    // (the production grids sit well below it).
    for (int m : {136, 4096, 65536}) bench_string(m, string_steps);
    for (int m : {44, 160, 320}) bench_plate(m, plate_steps);

    if (note_seconds > 0.0) {
        wolf::ScenarioConfig cfg = wolf::scenario_preset("PLUCK-0S");
        cfg.sim.total_time = note_seconds;
        const auto t0 = Clock::now();
        const wolf::Recording rec = wolf::run_simulation(cfg, cfg.wolf_note);
        const double t = seconds_since(t0);
        std::printf("note    %.3f s simulated in %.2f s  (%.0f steps/s, "
                    "%.2fx real time)\n",
                    note_seconds, t, rec.body.size() / t, note_seconds / t);
    }
    return 0;
}
