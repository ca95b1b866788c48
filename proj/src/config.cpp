#include "wolf/config.hpp"
#include "wolf/errors.hpp"

#include <json.hpp>

#include <fstream>
#include <functional>
#include <sstream>

namespace wolf {

namespace {

using nlohmann::json;

constexpr double kPluckLengths[] = {0.248, 0.234, 0.222, 0.209, 0.197,
                                    0.189, 0.178, 0.169, 0.160};
constexpr double kBowLengths[] = {0.251, 0.238, 0.226, 0.216, 0.201,
                                  0.186, 0.177, 0.168, 0.159};
constexpr double kExtraLength = 0.104;
constexpr int kWolfNote = 4; // 0-based; note 5 of the tables

[[noreturn]] void fail(const std::string& path, const std::string& what) {
    throw ValidationError("config: " + path + " " + what);
}

double as_number(const json& j, const std::string& path) {
    if (!j.is_number()) fail(path, "must be a number");
    return j.get<double>();
}

int as_integer(const json& j, const std::string& path) {
    if (!j.is_number_integer()) fail(path, "must be an integer");
    return j.get<int>();
}

std::string as_string(const json& j, const std::string& path) {
    if (!j.is_string()) fail(path, "must be a string");
    return j.get<std::string>();
}

Position as_position(const json& j, const std::string& path) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() ||
        !j[1].is_number()) {
        fail(path, "must be an array of two numbers [x, y]");
    }
    return {j[0].get<double>(), j[1].get<double>()};
}

std::vector<double> as_number_list(const json& j, const std::string& path) {
    if (!j.is_array()) fail(path, "must be an array of numbers");
    std::vector<double> out;
    out.reserve(j.size());
    for (const auto& v : j) {
        if (!v.is_number()) fail(path, "must contain only numbers");
        out.push_back(v.get<double>());
    }
    return out;
}

using FieldFn = std::function<void(const json&, const std::string&)>;
using Field = std::pair<const char*, FieldFn>;

void apply_fields(const json& obj, const std::string& path,
                  std::initializer_list<Field> fields) {
    if (!obj.is_object()) fail(path, "must be an object");
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        const FieldFn* fn = nullptr;
        for (const auto& [name, f] : fields) {
            if (it.key() == name) {
                fn = &f;
                break;
            }
        }
        if (!fn) fail(path + "." + it.key(), "is not a recognized field");
        (*fn)(it.value(), path + "." + it.key());
    }
}

void apply_string(StringParams& p, const json& j, const std::string& path) {
    apply_fields(j, path, {
        {"tension", [&](const json& v, const std::string& q) { p.tension = as_number(v, q); }},
        {"density", [&](const json& v, const std::string& q) { p.density = as_number(v, q); }},
        {"area", [&](const json& v, const std::string& q) { p.area = as_number(v, q); }},
        {"youngs_modulus", [&](const json& v, const std::string& q) { p.youngs_modulus = as_number(v, q); }},
        {"moment_inertia", [&](const json& v, const std::string& q) { p.moment_inertia = as_number(v, q); }},
        {"damping", [&](const json& v, const std::string& q) { p.damping = as_number(v, q); }},
    });
}

void apply_plate(PlateParams& p, const json& j, const std::string& path) {
    apply_fields(j, path, {
        {"side", [&](const json& v, const std::string& q) { p.side = as_number(v, q); }},
        {"tension", [&](const json& v, const std::string& q) { p.tension = as_number(v, q); }},
        {"density", [&](const json& v, const std::string& q) { p.density = as_number(v, q); }},
        {"youngs_modulus", [&](const json& v, const std::string& q) { p.youngs_modulus = as_number(v, q); }},
        {"thickness", [&](const json& v, const std::string& q) { p.thickness = as_number(v, q); }},
        {"poisson", [&](const json& v, const std::string& q) { p.poisson = as_number(v, q); }},
        {"damping", [&](const json& v, const std::string& q) { p.damping = as_number(v, q); }},
    });
}

void apply_bridge(BridgeParams& p, const json& j, const std::string& path) {
    apply_fields(j, path, {
        {"mass", [&](const json& v, const std::string& q) { p.mass = as_number(v, q); }},
        {"k_string", [&](const json& v, const std::string& q) { p.k_string = as_number(v, q); }},
        {"k_left", [&](const json& v, const std::string& q) { p.k_left = as_number(v, q); }},
        {"k_right", [&](const json& v, const std::string& q) { p.k_right = as_number(v, q); }},
        {"string_attach", [&](const json& v, const std::string& q) { p.string_attach = as_number(v, q); }},
        {"foot_left", [&](const json& v, const std::string& q) { p.foot_left = as_position(v, q); }},
        {"foot_right", [&](const json& v, const std::string& q) { p.foot_right = as_position(v, q); }},
    });
}

SuppressorParams parse_suppressor(const json& j, const std::string& path) {
    SuppressorParams p;
    apply_fields(j, path, {
        {"mass", [&](const json& v, const std::string& q) { p.mass = as_number(v, q); }},
        {"frequency", [&](const json& v, const std::string& q) { p.frequency = as_number(v, q); }},
        {"damping", [&](const json& v, const std::string& q) { p.damping = as_number(v, q); }},
        {"position", [&](const json& v, const std::string& q) { p.position = as_position(v, q); }},
    });
    return p;
}

void apply_excitation(ScenarioConfig& cfg, const json& j,
                      const std::string& path) {
    apply_fields(j, path, {
        {"kind", [&](const json& v, const std::string& q) {
            const std::string kind = as_string(v, q);
            if (kind == "pluck") cfg.excitation = ExcitationKind::Pluck;
            else if (kind == "bow") cfg.excitation = ExcitationKind::Bow;
            else fail(q, "must be \"pluck\" or \"bow\"");
        }},
        {"pluck", [&](const json& v, const std::string& q) {
            apply_fields(v, q, {
                {"amplitude", [&](const json& w, const std::string& r) { cfg.pluck.amplitude = as_number(w, r); }},
                {"duration", [&](const json& w, const std::string& r) { cfg.pluck.duration = as_number(w, r); }},
            });
        }},
        {"bow", [&](const json& v, const std::string& q) {
            apply_fields(v, q, {
                {"speed", [&](const json& w, const std::string& r) { cfg.bow.speed = as_number(w, r); }},
                {"normal_force", [&](const json& w, const std::string& r) { cfg.bow.normal_force = as_number(w, r); }},
                {"max_force", [&](const json& w, const std::string& r) { cfg.bow.max_force = as_number(w, r); }},
                {"mu_static", [&](const json& w, const std::string& r) { cfg.bow.mu_static = as_number(w, r); }},
                {"mu_dynamic", [&](const json& w, const std::string& r) { cfg.bow.mu_dynamic = as_number(w, r); }},
                {"eps", [&](const json& w, const std::string& r) { cfg.bow.eps = as_number(w, r); }},
            });
        }},
    });
}

void apply_sim(SimGridConfig& p, const json& j, const std::string& path) {
    apply_fields(j, path, {
        {"dt", [&](const json& v, const std::string& q) { p.dt = as_number(v, q); }},
        {"total_time", [&](const json& v, const std::string& q) { p.total_time = as_number(v, q); }},
        {"exc_point", [&](const json& v, const std::string& q) { p.exc_point = as_number(v, q); }},
        {"rec_point", [&](const json& v, const std::string& q) { p.rec_point = as_position(v, q); }},
    });
}

void apply_indicators(IndicatorParams& p, const json& j,
                      const std::string& path) {
    apply_fields(j, path, {
        {"theta", [&](const json& v, const std::string& q) { p.theta = as_number(v, q); }},
        {"f_lo", [&](const json& v, const std::string& q) { p.f_lo = as_number(v, q); }},
        {"f_hi", [&](const json& v, const std::string& q) { p.f_hi = as_number(v, q); }},
        {"f_max", [&](const json& v, const std::string& q) { p.f_max = as_number(v, q); }},
        {"t_star", [&](const json& v, const std::string& q) { p.t_star = as_number(v, q); }},
        {"log_floor", [&](const json& v, const std::string& q) { p.log_floor = as_number(v, q); }},
    });
}

void apply_notes(ScenarioConfig& cfg, const json& j, const std::string& path) {
    apply_fields(j, path, {
        {"lengths", [&](const json& v, const std::string& q) {
            cfg.note_lengths = as_number_list(v, q);
        }},
        {"wolf_note", [&](const json& v, const std::string& q) {
            cfg.wolf_note = as_integer(v, q) - 1; // file is 1-based
        }},
    });
}

} // namespace

std::vector<std::string> preset_names() {
    return {"PLUCK-0S", "PLUCK-1S", "EXTRA-492", "BOW-0S", "BOW-1S", "BOW-2S"};
}

ScenarioConfig default_scenario(ExcitationKind kind) {
    ScenarioConfig cfg;
    cfg.excitation = kind;
    if (kind == ExcitationKind::Pluck) {
        cfg.note_lengths.assign(std::begin(kPluckLengths),
                                std::end(kPluckLengths));
    } else {
        cfg.note_lengths.assign(std::begin(kBowLengths), std::end(kBowLengths));
    }
    cfg.wolf_note = kWolfNote;
    return cfg;
}

ScenarioConfig scenario_preset(const std::string& name) {
    const SuppressorParams tuned{8.5e-3, 246.9, 2.1, {0.0, 0.0}};

    if (name == "PLUCK-0S") return default_scenario(ExcitationKind::Pluck);
    if (name == "PLUCK-1S") {
        ScenarioConfig cfg = default_scenario(ExcitationKind::Pluck);
        SuppressorParams su = tuned;
        su.position = {0.70, 0.49};
        cfg.suppressors.push_back(su);
        return cfg;
    }
    if (name == "EXTRA-492") {
        ScenarioConfig cfg = default_scenario(ExcitationKind::Pluck);
        cfg.note_lengths.push_back(kExtraLength);
        return cfg;
    }
    if (name == "BOW-0S") return default_scenario(ExcitationKind::Bow);
    if (name == "BOW-1S") {
        ScenarioConfig cfg = default_scenario(ExcitationKind::Bow);
        SuppressorParams su = tuned;
        su.position = {0.19, 0.49};
        cfg.suppressors.push_back(su);
        return cfg;
    }
    if (name == "BOW-2S") {
        ScenarioConfig cfg = default_scenario(ExcitationKind::Bow);
        SuppressorParams su = tuned;
        su.mass = tuned.mass / 2.0;
        su.position = {0.42, 0.49};
        cfg.suppressors.push_back(su);
        su.position = {0.19, 0.50};
        cfg.suppressors.push_back(su);
        return cfg;
    }

    std::ostringstream os;
    os << "unknown scenario '" << name << "'; valid names:";
    for (const auto& n : preset_names()) os << ' ' << n;
    throw ValidationError(os.str());
}

ScenarioConfig load_config(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open config " + path);

    json root;
    try {
        root = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ValidationError(std::string("config: ") + e.what());
    }
    if (!root.is_object()) throw ValidationError("config: root must be an object");

    // The base comes from an explicit preset, or from the excitation kind
    // so each kind gets its own note table.
    ScenarioConfig cfg;
    if (const auto it = root.find("scenario"); it != root.end()) {
        cfg = scenario_preset(as_string(*it, "scenario"));
    } else {
        ExcitationKind kind = ExcitationKind::Pluck;
        if (const auto exc = root.find("excitation"); exc != root.end() &&
                                                      exc->is_object()) {
            if (const auto k = exc->find("kind"); k != exc->end() &&
                                                  k->is_string() &&
                                                  *k == "bow") {
                kind = ExcitationKind::Bow;
            }
        }
        cfg = default_scenario(kind);
    }

    apply_fields(root, "config", {
        {"scenario", [](const json&, const std::string&) { /* consumed above */ }},
        {"string", [&](const json& v, const std::string& q) { apply_string(cfg.string, v, q); }},
        {"plate", [&](const json& v, const std::string& q) { apply_plate(cfg.plate, v, q); }},
        {"bridge", [&](const json& v, const std::string& q) { apply_bridge(cfg.bridge, v, q); }},
        {"suppressors", [&](const json& v, const std::string& q) {
            if (!v.is_array()) fail(q, "must be an array");
            cfg.suppressors.clear();
            for (std::size_t i = 0; i < v.size(); ++i) {
                cfg.suppressors.push_back(
                    parse_suppressor(v[i], q + "[" + std::to_string(i) + "]"));
            }
        }},
        {"excitation", [&](const json& v, const std::string& q) { apply_excitation(cfg, v, q); }},
        {"sim", [&](const json& v, const std::string& q) { apply_sim(cfg.sim, v, q); }},
        {"indicators", [&](const json& v, const std::string& q) { apply_indicators(cfg.indicators, v, q); }},
        {"notes", [&](const json& v, const std::string& q) { apply_notes(cfg, v, q); }},
    });

    cfg.validate();
    return cfg;
}

std::string scenario_to_json(const ScenarioConfig& cfg) {
    json root;
    root["string"] = {{"tension", cfg.string.tension},
                      {"density", cfg.string.density},
                      {"area", cfg.string.area},
                      {"youngs_modulus", cfg.string.youngs_modulus},
                      {"moment_inertia", cfg.string.moment_inertia},
                      {"damping", cfg.string.damping}};
    root["plate"] = {{"side", cfg.plate.side},
                     {"tension", cfg.plate.tension},
                     {"density", cfg.plate.density},
                     {"youngs_modulus", cfg.plate.youngs_modulus},
                     {"thickness", cfg.plate.thickness},
                     {"poisson", cfg.plate.poisson},
                     {"damping", cfg.plate.damping}};
    root["bridge"] = {{"mass", cfg.bridge.mass},
                      {"k_string", cfg.bridge.k_string},
                      {"k_left", cfg.bridge.k_left},
                      {"k_right", cfg.bridge.k_right},
                      {"string_attach", cfg.bridge.string_attach},
                      {"foot_left", {cfg.bridge.foot_left.x, cfg.bridge.foot_left.y}},
                      {"foot_right", {cfg.bridge.foot_right.x, cfg.bridge.foot_right.y}}};
    root["suppressors"] = json::array();
    for (const auto& su : cfg.suppressors) {
        root["suppressors"].push_back({{"mass", su.mass},
                                       {"frequency", su.frequency},
                                       {"damping", su.damping},
                                       {"position", {su.position.x, su.position.y}}});
    }
    root["excitation"] = {
        {"kind", cfg.excitation == ExcitationKind::Pluck ? "pluck" : "bow"},
        {"pluck", {{"amplitude", cfg.pluck.amplitude},
                   {"duration", cfg.pluck.duration}}},
        {"bow", {{"speed", cfg.bow.speed},
                 {"normal_force", cfg.bow.normal_force},
                 {"max_force", cfg.bow.max_force},
                 {"mu_static", cfg.bow.mu_static},
                 {"mu_dynamic", cfg.bow.mu_dynamic},
                 {"eps", cfg.bow.eps}}}};
    root["sim"] = {{"dt", cfg.sim.dt},
                   {"total_time", cfg.sim.total_time},
                   {"exc_point", cfg.sim.exc_point},
                   {"rec_point", {cfg.sim.rec_point.x, cfg.sim.rec_point.y}}};
    root["indicators"] = {{"theta", cfg.indicators.theta},
                          {"f_lo", cfg.indicators.f_lo},
                          {"f_hi", cfg.indicators.f_hi},
                          {"f_max", cfg.indicators.f_max},
                          {"t_star", cfg.indicators.t_star},
                          {"log_floor", cfg.indicators.log_floor}};
    root["notes"] = {{"lengths", cfg.note_lengths},
                     {"wolf_note", cfg.wolf_note + 1}};
    return root.dump(2) + "\n";
}

} // namespace wolf
