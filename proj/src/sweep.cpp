#include "wolf/sweep.hpp"

#include "wolf/errors.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace wolf {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

void require(bool ok, const std::string& what) {
    if (!ok) throw ValidationError(what);
}

std::vector<double> interior_grid(int n) {
    std::vector<double> g(n);
    for (int k = 0; k < n; ++k) {
        g[k] = static_cast<double>(k + 1) / static_cast<double>(n + 1);
    }
    return g;
}

void prepare(HeatMap& hm, int nx, int ny) {
    require(nx >= 1 && ny >= 1, "sweep resolution must be at least 1x1");
    hm.xs = interior_grid(nx);
    hm.ys = interior_grid(ny);
    const std::size_t cells = static_cast<std::size_t>(nx) * ny;
    hm.wolf.assign(cells, kNaN);
    hm.sustain.assign(cells, kNaN);
    hm.fidelity.assign(cells, kNaN);
    hm.failed.assign(cells, 0);
}

} // namespace

IndicatorTriple evaluate_indicators(const ScenarioConfig& cfg,
                                    const std::vector<Spectrum>* reference) {
    cfg.validate();
    const int n = static_cast<int>(cfg.note_lengths.size());
    if (reference && reference->size() != static_cast<std::size_t>(n)) {
        throw ValidationError("reference spectra count does not match the notes");
    }

    IndicatorTriple out;
    out.wolf = -std::numeric_limits<double>::infinity();
    double tail_min = std::numeric_limits<double>::infinity();
    double dist_acc = 0.0;
    int dist_cnt = 0;

    for (int i = 0; i < n; ++i) {
        const Recording rec = run_simulation(cfg, i);
        out.wolf = std::max(out.wolf, wolf_note_indicator(rec.body,
                                                          rec.sample_rate,
                                                          cfg.indicators));
        tail_min = std::min(tail_min, tail_peak(rec.body, rec.sample_rate,
                                                cfg.indicators.t_star));
        if (reference && i != cfg.wolf_note) {
            const auto unit = normalize_unit(rec.body);
            const auto spec = log_spectrum(unit, rec.sample_rate,
                                           cfg.indicators.log_floor);
            dist_acc += spectral_distance((*reference)[i], spec);
            ++dist_cnt;
        }
    }

    out.sustain = -tail_min;
    out.fidelity = dist_cnt > 0 ? dist_acc / dist_cnt : kNaN;
    return out;
}

std::vector<Spectrum> reference_spectra(const ScenarioConfig& cfg) {
    ScenarioConfig bare = cfg;
    bare.suppressors.clear();
    const auto recs = run_all_notes(bare);
    return note_spectra(recs, cfg.indicators);
}

HeatMap placement_sweep(const ScenarioConfig& cfg, int nx, int ny) {
    cfg.validate();
    require(cfg.suppressors.size() == 1,
            "placement sweep needs exactly one suppressor");

    const auto ref = reference_spectra(cfg);

    HeatMap hm;
    hm.x_label = "suppressor_x";
    hm.y_label = "suppressor_y";
    prepare(hm, nx, ny);

    const long cells = static_cast<long>(nx) * ny;
#pragma omp parallel for schedule(dynamic) if (cells > 1)
    for (long c = 0; c < cells; ++c) {
        const int ix = static_cast<int>(c % nx);
        const int iy = static_cast<int>(c / nx);
        ScenarioConfig local = cfg;
        local.suppressors[0].position = {hm.xs[ix], hm.ys[iy]};
        try {
            const IndicatorTriple v = evaluate_indicators(local, &ref);
            hm.wolf[c] = v.wolf;
            hm.sustain[c] = v.sustain;
            hm.fidelity[c] = v.fidelity;
        } catch (const std::exception&) {
            hm.failed[c] = 1;
        }
    }
    return hm;
}

std::vector<std::pair<double, double>>
sensitivity_scan(const ScenarioConfig& cfg, SweepAxis axis,
                 std::span<const double> values) {
    cfg.validate();
    require(cfg.suppressors.size() == 1,
            "sensitivity scan needs exactly one suppressor");
    require(!values.empty(), "sensitivity scan needs at least one value");

    const auto apply = [axis](ScenarioConfig& c, double v) {
        switch (axis) {
        case SweepAxis::Frequency: c.suppressors[0].frequency = v; break;
        case SweepAxis::Mass: c.suppressors[0].mass = v; break;
        case SweepAxis::Damping: c.suppressors[0].damping = v; break;
        }
    };

    // Reject bad values before any heavy work starts.
    for (double v : values) {
        ScenarioConfig probe = cfg;
        apply(probe, v);
        probe.suppressors[0].validate();
    }

    std::vector<std::pair<double, double>> out(values.size());
    const long n = static_cast<long>(values.size());
#pragma omp parallel for schedule(dynamic) if (n > 1)
    for (long i = 0; i < n; ++i) {
        ScenarioConfig local = cfg;
        apply(local, values[i]);
        double j = kNaN;
        try {
            const Recording rec = run_simulation(local, local.wolf_note);
            j = wolf_note_indicator(rec.body, rec.sample_rate, local.indicators);
        } catch (const std::exception&) {
            // leave NaN
        }
        out[i] = {values[i], j};
    }
    return out;
}

HeatMap cross_sweep_two(const ScenarioConfig& cfg, double x1_fixed,
                        double y2_fixed, int nx, int ny,
                        const IndicatorBaseline& baseline) {
    cfg.validate();
    require(cfg.suppressors.size() == 2,
            "cross sweep needs exactly two suppressors");
    require(x1_fixed > 0.0 && x1_fixed < 1.0, "fixed x1 must lie in (0, 1)");
    require(y2_fixed > 0.0 && y2_fixed < 1.0, "fixed y2 must lie in (0, 1)");
    require(std::isfinite(baseline.wolf) && std::isfinite(baseline.sustain) &&
                std::isfinite(baseline.fidelity),
            "cross sweep baseline indicators must be finite");

    const auto ref = reference_spectra(cfg);

    HeatMap hm;
    hm.x_label = "suppressor2_x";
    hm.y_label = "suppressor1_y";
    prepare(hm, nx, ny);

    const auto rel = [](double v, double base) {
        return (v - base) / std::max(std::fabs(base), 1.0e-300);
    };

    const long cells = static_cast<long>(nx) * ny;
#pragma omp parallel for schedule(dynamic) if (cells > 1)
    for (long c = 0; c < cells; ++c) {
        const int ix = static_cast<int>(c % nx);
        const int iy = static_cast<int>(c / nx);
        ScenarioConfig local = cfg;
        local.suppressors[0].position = {x1_fixed, hm.ys[iy]};
        local.suppressors[1].position = {hm.xs[ix], y2_fixed};
        try {
            const IndicatorTriple v = evaluate_indicators(local, &ref);
            hm.wolf[c] = rel(v.wolf, baseline.wolf);
            hm.sustain[c] = rel(v.sustain, baseline.sustain);
            hm.fidelity[c] = rel(v.fidelity, baseline.fidelity);
        } catch (const std::exception&) {
            hm.failed[c] = 1;
        }
    }
    return hm;
}

} // namespace wolf
