// Command-line front end: scenario simulation, placement/cross sweeps,
// sensitivity scans, and analysis of external recordings. All numerics
// live in the library; this file only parses flags, calls in, and
// serializes results.

#include "wolf/analysis.hpp"
#include "wolf/config.hpp"
#include "wolf/csv_io.hpp"
#include "wolf/errors.hpp"
#include "wolf/simulator.hpp"
#include "wolf/sweep.hpp"
#include "wolf/wav.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct CommonOpts {
    std::string scenario;
    std::string config_path;
    std::string out_dir = ".";
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool with_out = true) {
    cmd->add_option("--scenario", opts.scenario,
                    "Preset name (PLUCK-0S, PLUCK-1S, EXTRA-492, BOW-0S, "
                    "BOW-1S, BOW-2S)");
    cmd->add_option("--config", opts.config_path, "Scenario file (JSON)");
    if (with_out) {
        cmd->add_option("--out", opts.out_dir, "Output directory");
    }
}

wolf::ScenarioConfig resolve_config(const CommonOpts& opts) {
    if (!opts.scenario.empty() && !opts.config_path.empty()) {
        throw wolf::ValidationError("use either --scenario or --config, not both");
    }
    if (!opts.config_path.empty()) return wolf::load_config(opts.config_path);
    if (!opts.scenario.empty()) return wolf::scenario_preset(opts.scenario);
    return wolf::scenario_preset("PLUCK-0S");
}

fs::path ensure_out_dir(const std::string& dir) {
    fs::path p(dir);
    std::error_code ec;
    fs::create_directories(p, ec);
    if (ec) throw wolf::IoError("cannot create output directory " + dir);
    return p;
}

void write_text(const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw wolf::IoError("cannot open " + path.string() + " for writing");
    out << text;
    if (!out) throw wolf::IoError("short write to " + path.string());
}

int wav_rate(double dt, int decimate_factor) {
    return static_cast<int>(std::lround(1.0 / (dt * decimate_factor)));
}

json json_or_null(double v) {
    if (std::isfinite(v)) return v;
    return nullptr;
}

int cmd_simulate(const CommonOpts& opts, int decimate_factor) {
    const wolf::ScenarioConfig cfg = resolve_config(opts);
    const fs::path out = ensure_out_dir(opts.out_dir);

    const auto recs = wolf::run_all_notes(cfg);

    std::optional<std::vector<wolf::Spectrum>> ref;
    if (!cfg.suppressors.empty()) ref = wolf::reference_spectra(cfg);
    const wolf::IndicatorReport report = wolf::analyze_notes(
        recs, cfg.indicators, cfg.wolf_note, ref ? &*ref : nullptr);

    json jnotes = json::array();
    for (std::size_t i = 0; i < recs.size(); ++i) {
        char name[32];
        std::snprintf(name, sizeof(name), "note_%02zu.wav", i + 1);
        const auto samples = wolf::decimate(recs[i].body, decimate_factor);
        wolf::write_wav((out / name).string(), samples,
                        wav_rate(cfg.sim.dt, decimate_factor));

        json jn;
        jn["length_m"] = cfg.note_lengths[i];
        jn["wav"] = name;
        jn["j_wolf"] = report.j_wolf[i];
        jn["fundamental_hz"] = wolf::dominant_frequency(
            recs[i].body, recs[i].sample_rate, 20.0, 2000.0);
        if (!report.distance_db_hz.empty()) {
            jn["timbre_shift_db_hz"] = report.distance_db_hz[i];
        }
        jnotes.push_back(jn);
    }

    json jr;
    jr["notes"] = jnotes;
    jr["wolf_note"] = cfg.wolf_note + 1;
    jr["J_wolf"] = report.wolf_max;
    jr["J_sustain"] = report.sustain;
    jr["J_fidelity"] = json_or_null(report.fidelity);
    write_text(out / "report.json", jr.dump(2) + "\n");
    write_text(out / "effective_config.json", wolf::scenario_to_json(cfg));

    for (std::size_t i = 0; i < recs.size(); ++i) {
        std::printf("note %2zu  l = %.3f m  j_wolf = %.4f\n", i + 1,
                    cfg.note_lengths[i], report.j_wolf[i]);
    }
    std::printf("J_wolf = %.4f\nJ_sustain = %.6g\n", report.wolf_max,
                report.sustain);
    if (std::isfinite(report.fidelity)) {
        std::printf("J_fidelity = %.6g dB*Hz\n", report.fidelity);
    }
    std::printf("outputs in %s\n", out.string().c_str());
    return 0;
}

wolf::IndicatorBaseline
single_suppressor_baseline(const wolf::ScenarioConfig& cfg,
                           const std::string& baseline_config) {
    wolf::ScenarioConfig base;
    if (!baseline_config.empty()) {
        base = wolf::load_config(baseline_config);
    } else {
        // Merge the pair into one device at the single-suppressor optimum
        // of the matching excitation.
        base = cfg;
        wolf::SuppressorParams su = cfg.suppressors.at(0);
        su.mass = 0.0;
        for (const auto& s : cfg.suppressors) su.mass += s.mass;
        su.position = cfg.excitation == wolf::ExcitationKind::Bow
                          ? wolf::Position{0.19, 0.49}
                          : wolf::Position{0.70, 0.49};
        base.suppressors = {su};
    }
    if (base.suppressors.size() != 1) {
        throw wolf::ValidationError(
            "baseline config must have exactly one suppressor");
    }
    const auto ref = wolf::reference_spectra(base);
    const wolf::IndicatorTriple t = wolf::evaluate_indicators(base, &ref);
    return {t.wolf, t.sustain, t.fidelity};
}

int cmd_sweep(const CommonOpts& opts, int resolution, bool full_scale,
              double fix_x1, double fix_y2, const std::string& baseline_config) {
    const wolf::ScenarioConfig cfg = resolve_config(opts);
    const fs::path out = ensure_out_dir(opts.out_dir);

    int n = resolution;
    if (full_scale) {
        n = 45;
        std::fprintf(stderr,
                     "warning: full-scale sweep evaluates %d cells x %zu notes; "
                     "expect a long run\n",
                     n * n, cfg.note_lengths.size());
    }

    wolf::HeatMap hm;
    if (cfg.suppressors.size() == 1) {
        hm = wolf::placement_sweep(cfg, n, n);
    } else if (cfg.suppressors.size() == 2) {
        const wolf::IndicatorBaseline baseline =
            single_suppressor_baseline(cfg, baseline_config);
        json jb = {{"J_wolf", baseline.wolf},
                   {"J_sustain", baseline.sustain},
                   {"J_fidelity", baseline.fidelity}};
        write_text(out / "baseline.json", jb.dump(2) + "\n");
        hm = wolf::cross_sweep_two(cfg, fix_x1, fix_y2, n, n, baseline);
    } else {
        throw wolf::ValidationError(
            "sweep needs one suppressor (placement) or two (cross sweep)");
    }

    const fs::path csv = out / "heatmap.csv";
    wolf::write_heatmap_csv(hm, csv.string());

    int failed = 0;
    for (const auto f : hm.failed) failed += f;
    std::printf("%dx%d sweep done, %d failed cell(s), map in %s\n", hm.nx(),
                hm.ny(), failed, csv.string().c_str());
    return 0;
}

int cmd_sensitivity(const CommonOpts& opts, const std::string& axis_name,
                    std::vector<double> values) {
    const wolf::ScenarioConfig cfg = resolve_config(opts);
    const fs::path out = ensure_out_dir(opts.out_dir);

    wolf::SweepAxis axis;
    double base_value = 0.0;
    if (cfg.suppressors.size() != 1) {
        throw wolf::ValidationError("sensitivity scan needs exactly one suppressor");
    }
    if (axis_name == "frequency") {
        axis = wolf::SweepAxis::Frequency;
        base_value = cfg.suppressors[0].frequency;
    } else if (axis_name == "mass") {
        axis = wolf::SweepAxis::Mass;
        base_value = cfg.suppressors[0].mass;
    } else if (axis_name == "damping") {
        axis = wolf::SweepAxis::Damping;
        base_value = cfg.suppressors[0].damping;
    } else {
        throw wolf::ValidationError(
            "--axis must be frequency, mass, or damping");
    }

    if (values.empty()) {
        for (int k = -4; k <= 4; ++k) {
            values.push_back(base_value * (1.0 + 0.1 * k));
        }
    }

    const auto curve = wolf::sensitivity_scan(cfg, axis, values);
    const fs::path csv = out / ("sensitivity_" + axis_name + ".csv");
    wolf::write_curve_csv(curve, axis_name, "j_wolf", csv.string());

    for (const auto& [x, j] : curve) {
        std::printf("%s = %.6g  j_wolf = %.4f\n", axis_name.c_str(), x, j);
    }
    std::printf("curve in %s\n", csv.string().c_str());
    return 0;
}

std::vector<std::pair<double, double>>
parse_segments(const std::vector<std::string>& specs) {
    std::vector<std::pair<double, double>> out;
    for (const auto& s : specs) {
        const std::size_t colon = s.find(':');
        if (colon == std::string::npos) {
            throw wolf::ValidationError("segment '" + s +
                                        "' must look like start:end");
        }
        try {
            out.emplace_back(std::stod(s.substr(0, colon)),
                             std::stod(s.substr(colon + 1)));
        } catch (const std::exception&) {
            throw wolf::ValidationError("cannot parse segment '" + s + "'");
        }
    }
    return out;
}

int cmd_analyze(const CommonOpts& opts, const std::string& wav_path,
                const std::vector<std::string>& segment_specs) {
    // Indicator parameters come from the config (or the defaults).
    const wolf::ScenarioConfig cfg = resolve_config(opts);
    const fs::path out = ensure_out_dir(opts.out_dir);
    const auto segments = parse_segments(segment_specs);

    const wolf::WavData wav = wolf::read_wav(wav_path);
    const double duration =
        static_cast<double>(wav.samples.size()) / wav.sample_rate;

    std::vector<std::pair<double, double>> rows;
    std::string csv_text = "start_s,end_s,j_wolf\n";
    for (const auto& [a, b] : segments) {
        if (!(a >= 0.0 && a < b && b <= duration + 1e-9)) {
            throw wolf::ValidationError(
                "segment [" + std::to_string(a) + ", " + std::to_string(b) +
                "] outside the file duration");
        }
        const auto i0 = static_cast<std::size_t>(std::lround(a * wav.sample_rate));
        const auto i1 = static_cast<std::size_t>(std::lround(b * wav.sample_rate));
        const std::span<const double> seg(wav.samples.data() + i0, i1 - i0);
        const double j =
            wolf::wolf_note_indicator(seg, wav.sample_rate, cfg.indicators);
        std::printf("[%.3f, %.3f] s  j_wolf = %.4f\n", a, b, j);
        csv_text += wolf::format_double(a) + "," + wolf::format_double(b) +
                    "," + wolf::format_double(j) + "\n";
    }

    const fs::path csv = out / "segments.csv";
    write_text(csv, csv_text);
    std::printf("report in %s\n", csv.string().c_str());
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Wolf-note simulator: coupled string/bridge/plate model "
                 "with tuned-mass suppressors"};
    app.require_subcommand(1);

    CommonOpts opts;
    int decimate_factor = 1;
    int resolution = 9;
    bool full_scale = false;
    double fix_x1 = 0.42;
    double fix_y2 = 0.50;
    std::string baseline_config;
    std::string axis_name;
    std::vector<double> values;
    std::string wav_path;
    std::vector<std::string> segment_specs;

    auto* sim = app.add_subcommand("simulate",
                                   "Run every note and write WAVs + report");
    add_common(sim, opts);
    sim->add_option("--decimate", decimate_factor,
                    "Keep every Nth sample (anti-aliased)")
        ->check(CLI::PositiveNumber);

    auto* swp = app.add_subcommand(
        "sweep", "Placement sweep (1 suppressor) or cross sweep (2)");
    add_common(swp, opts);
    swp->add_option("--resolution", resolution, "Grid cells per axis")
        ->check(CLI::PositiveNumber);
    swp->add_flag("--full-scale", full_scale, "45x45 grid (slow)");
    swp->add_option("--fix-x1", fix_x1,
                    "Cross sweep: fixed x of suppressor 1");
    swp->add_option("--fix-y2", fix_y2,
                    "Cross sweep: fixed y of suppressor 2");
    swp->add_option("--baseline-config", baseline_config,
                    "Single-suppressor scenario the cross sweep is "
                    "normalized against");

    auto* sen = app.add_subcommand("sensitivity",
                                   "Wolf-note beating vs one suppressor "
                                   "parameter");
    add_common(sen, opts);
    sen->add_option("--axis", axis_name, "frequency, mass, or damping")
        ->required();
    sen->add_option("--values", values, "Explicit parameter values")
        ->delimiter(',');

    auto* ana = app.add_subcommand("analyze",
                                   "Beating indicator of segments of a WAV "
                                   "file");
    add_common(ana, opts);
    ana->add_option("--wav", wav_path, "Mono 16-bit PCM file")->required();
    ana->add_option("--segments", segment_specs,
                    "Note boundaries start:end in seconds")
        ->delimiter(',');

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (sim->parsed()) return cmd_simulate(opts, decimate_factor);
        if (swp->parsed())
            return cmd_sweep(opts, resolution, full_scale, fix_x1, fix_y2,
                             baseline_config);
        if (sen->parsed()) return cmd_sensitivity(opts, axis_name, values);
        if (ana->parsed()) return cmd_analyze(opts, wav_path, segment_specs);
    } catch (const wolf::ValidationError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    } catch (const wolf::SimulationError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const wolf::IoError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 0;
}
