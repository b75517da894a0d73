// Copyright 2026 The numphase Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "numphase/atomic_qubit.hpp"
#include "numphase/bathkernel.hpp"
#include "numphase/dissipative_oscillator.hpp"
#include "numphase/errors.hpp"
#include "numphase/qnd_oscillator.hpp"

// One scenario per JSON file:
//
//   {
//     "scenario": "coherent_qnd",
//     "initial_state": { "alpha_abs": 1.0, "theta0": 0.0 },
//     "oscillator": { "omega": 1.0 },
//     "bath": null,
//     "evolution_time": 0.0,
//     "sweep": { "parameter": "initial_state.alpha_abs", "start": 0.5, "stop": 3.0, "n_steps": 11 },
//     "numerics": { "n_max": "auto", "epsilon_tail": 1e-10, "grid_points": 2048, "mu": "auto" }
//   }
//
// Amplitudes may be given as alpha_abs / xi_abs or as their squares alpha_sq / xi_sq.

namespace numphase::runner {

using nlohmann::json;

enum class ScenarioKind {
    CoherentQnd,
    SqueezedCoherentQnd,
    KerrQnd,
    SqueezedKerrQnd,
    CatLindblad,
    AnharmonicDissipative,
    QubitPhaseDamping,
    QubitSgad,
};

inline constexpr std::string_view kScenarioNames[] = {
    "coherent_qnd", "squeezed_coherent_qnd", "kerr_qnd",           "squeezed_kerr_qnd",
    "cat_lindblad", "anharmonic_dissipative", "qubit_phase_damping", "qubit_sgad",
};

inline std::string_view scenario_name(ScenarioKind k) { return kScenarioNames[static_cast<int>(k)]; }

inline bool is_qubit(ScenarioKind k) { return k == ScenarioKind::QubitPhaseDamping || k == ScenarioKind::QubitSgad; }

struct Numerics {
    std::optional<std::size_t> n_max;  // nullopt: choose automatically
    double epsilon_tail = 1e-10;
    std::size_t grid_points = kDefaultGridPoints;
    std::optional<double> mu;  // nullopt: recomputed for qubits, 1 for oscillators
};

/// Fully parsed, validated single-point scenario.
struct Scenario {
    ScenarioKind kind = ScenarioKind::CoherentQnd;
    CoherentInit coherent;
    double r1 = 0.0;
    double psi = 0.0;
    double chi_kerr = 0.0;
    CatInit cat;
    AnharmonicDissInit anharmonic;
    AtomicCoherentState atom;
    double omega = 1.0;
    double lambda_anh = 0.0;
    std::optional<QndBathConfig> qnd_bath;
    double gamma0 = 0.0;       // dissipative and SGAD baths
    double temperature = 0.0;  // dissipative and SGAD baths
    double squeeze_r = 0.0;    // SGAD
    double phi_sq = 0.0;       // SGAD
    double evolution_time = 0.0;
    Numerics numerics;
};

struct Sweep {
    std::string parameter;  // dotted path into the config document
    std::vector<double> values;
};

struct ScenarioConfig {
    json document;
    Scenario base;
    Sweep sweep;
    std::string description;
};

namespace detail {

[[noreturn]] inline void config_error(const std::string& path, const std::string& what) {
    fail(ErrorCode::ConfigError, path + ": " + what);
}

/// Reads one JSON object, remembers which keys were consumed, and rejects the rest.
class ObjectReader {
   public:
    ObjectReader(const json& obj, std::string path, std::set<std::string>* numeric_paths)
        : obj_(obj), path_(std::move(path)), numeric_paths_(numeric_paths) {
        if (!obj_.is_object()) config_error(path_, "expected an object");
    }

    std::string child(const std::string& key) const { return path_.empty() ? key : path_ + "." + key; }

    bool has(const std::string& key) const { return obj_.contains(key); }

    double number(const std::string& key) {
        note_numeric(key);
        if (!obj_.contains(key)) config_error(child(key), "required field is missing");
        return read_number(key);
    }

    double number_or(const std::string& key, double fallback) {
        note_numeric(key);
        if (!obj_.contains(key)) return fallback;
        return read_number(key);
    }

    /// Exactly one of `abs_key` and `sq_key` must be present; returns the magnitude.
    double magnitude(const std::string& abs_key, const std::string& sq_key) {
        if (numeric_paths_) numeric_paths_->insert({child(abs_key), child(sq_key)});
        const bool a = obj_.contains(abs_key);
        const bool s = obj_.contains(sq_key);
        if (a == s) config_error(child(abs_key), "give exactly one of " + abs_key + " and " + sq_key);
        if (a) {
            const double v = number(abs_key);
            if (v < 0.0) config_error(child(abs_key), "must be nonnegative");
            return v;
        }
        const double v = number(sq_key);
        if (v < 0.0) config_error(child(sq_key), "must be nonnegative");
        return std::sqrt(v);
    }

    const json& raw(const std::string& key) {
        used_.insert(key);
        return obj_.at(key);
    }

    void finish() const {
        for (auto it = obj_.begin(); it != obj_.end(); ++it) {
            if (!used_.count(it.key())) config_error(child(it.key()), "unknown field");
        }
    }

   private:
    void note_numeric(const std::string& key) {
        used_.insert(key);
        if (numeric_paths_) numeric_paths_->insert(child(key));
    }

    double read_number(const std::string& key) const {
        const json& v = obj_.at(key);
        if (!v.is_number()) config_error(child(key), "expected a number");
        const double d = v.get<double>();
        if (!std::isfinite(d)) config_error(child(key), "must be finite");
        return d;
    }

    const json& obj_;
    std::string path_;
    std::set<std::string>* numeric_paths_;
    std::set<std::string> used_;
};

inline ScenarioKind parse_kind(const json& doc) {
    if (!doc.contains("scenario")) config_error("scenario", "required field is missing");
    if (!doc.at("scenario").is_string()) config_error("scenario", "expected a string");
    const std::string name = doc.at("scenario").get<std::string>();
    for (int i = 0; i < static_cast<int>(std::size(kScenarioNames)); ++i) {
        if (name == kScenarioNames[i]) return static_cast<ScenarioKind>(i);
    }
    config_error("scenario", "unknown scenario '" + name + "'");
}

inline std::optional<QndBathConfig> parse_qnd_bath(const json& doc, std::set<std::string>* paths) {
    if (!doc.contains("bath") || doc.at("bath").is_null()) return std::nullopt;
    ObjectReader r(doc.at("bath"), "bath", paths);
    QndBathConfig b;
    b.gamma0 = r.number("gamma0");
    b.omega_c = r.number("omega_c");
    b.temperature = r.number("temperature");
    b.squeeze_r = r.number_or("squeeze_r", 0.0);
    b.squeeze_a = r.number_or("squeeze_a", 0.0);
    r.finish();
    if (!(b.gamma0 > 0.0)) config_error("bath.gamma0", "must be positive");
    if (!(b.omega_c > 0.0)) config_error("bath.omega_c", "must be positive");
    if (b.temperature < 0.0) config_error("bath.temperature", "must be nonnegative");
    if (b.squeeze_r < 0.0) config_error("bath.squeeze_r", "must be nonnegative");
    if (b.squeeze_a < 0.0) config_error("bath.squeeze_a", "must be nonnegative");
    return b;
}

inline Numerics parse_numerics(const json& doc, std::set<std::string>* paths) {
    Numerics n;
    if (!doc.contains("numerics")) return n;
    const json& obj = doc.at("numerics");
    ObjectReader r(obj, "numerics", paths);
    if (r.has("n_max")) {
        const json& v = r.raw("n_max");
        if (v.is_string() && v.get<std::string>() == "auto") {
            n.n_max.reset();
        } else if (v.is_number_integer() && v.get<long long>() >= 1) {
            n.n_max = static_cast<std::size_t>(v.get<long long>());
        } else {
            config_error("numerics.n_max", "expected \"auto\" or a positive integer");
        }
    }
    n.epsilon_tail = r.number_or("epsilon_tail", n.epsilon_tail);
    if (!(n.epsilon_tail > 0.0 && n.epsilon_tail <= 1e-6)) config_error("numerics.epsilon_tail", "must lie in (0, 1e-6]");
    if (r.has("grid_points")) {
        const json& v = r.raw("grid_points");
        if (!v.is_number_integer() || v.get<long long>() < static_cast<long long>(kMinGridPoints)) {
            config_error("numerics.grid_points", "expected an integer >= " + std::to_string(kMinGridPoints));
        }
        n.grid_points = static_cast<std::size_t>(v.get<long long>());
    }
    if (r.has("mu")) {
        const json& v = r.raw("mu");
        if (v.is_string() && v.get<std::string>() == "auto") {
            n.mu.reset();
        } else if (v.is_number() && v.get<double>() > 0.0) {
            n.mu = v.get<double>();
        } else {
            config_error("numerics.mu", "expected \"auto\" or a positive number");
        }
    }
    r.finish();
    return n;
}

}  // namespace detail

/// Parses everything except the sweep block. `numeric_paths`, when given, collects the
/// dotted paths of every numeric field the scenario understands.
inline Scenario parse_scenario(const json& doc, std::set<std::string>* numeric_paths = nullptr) {
    using detail::config_error;
    using detail::ObjectReader;
    if (!doc.is_object()) config_error("<root>", "expected an object");
    for (auto it = doc.begin(); it != doc.end(); ++it) {
        static const std::set<std::string> top = {"scenario", "description",    "initial_state", "oscillator",
                                                  "bath",     "evolution_time", "sweep",         "numerics"};
        if (!top.count(it.key())) config_error(it.key(), "unknown field");
    }
    Scenario s;
    s.kind = detail::parse_kind(doc);
    if (!doc.contains("initial_state")) config_error("initial_state", "required field is missing");
    ObjectReader init(doc.at("initial_state"), "initial_state", numeric_paths);
    const json empty = json::object();
    ObjectReader osc(doc.contains("oscillator") ? doc.at("oscillator") : empty, "oscillator", numeric_paths);

    if (doc.contains("evolution_time")) {
        if (numeric_paths) numeric_paths->insert("evolution_time");
        if (!doc.at("evolution_time").is_number()) config_error("evolution_time", "expected a number");
        s.evolution_time = doc.at("evolution_time").get<double>();
    } else if (numeric_paths) {
        numeric_paths->insert("evolution_time");
    }
    if (!(s.evolution_time >= 0.0) || !std::isfinite(s.evolution_time)) {
        config_error("evolution_time", "must be finite and nonnegative");
    }

    auto positive = [](double v, const std::string& path) {
        if (!(v > 0.0)) config_error(path, "must be positive");
        return v;
    };

    switch (s.kind) {
        case ScenarioKind::CoherentQnd:
        case ScenarioKind::SqueezedCoherentQnd:
        case ScenarioKind::KerrQnd:
        case ScenarioKind::SqueezedKerrQnd: {
            s.coherent.alpha_abs = init.magnitude("alpha_abs", "alpha_sq");
            s.coherent.theta0 = init.number_or("theta0", 0.0);
            if (s.kind == ScenarioKind::KerrQnd || s.kind == ScenarioKind::SqueezedKerrQnd) {
                s.chi_kerr = init.number("chi_kerr");
            }
            if (s.kind == ScenarioKind::SqueezedCoherentQnd || s.kind == ScenarioKind::SqueezedKerrQnd) {
                s.r1 = init.number("r1");
                s.psi = init.number_or("psi", 0.0);
                if (s.r1 < 0.0) config_error("initial_state.r1", "must be nonnegative");
            }
            s.omega = positive(osc.number_or("omega", 1.0), "oscillator.omega");
            s.lambda_anh = osc.number_or("lambda_anh", 0.0);
            if (s.lambda_anh < 0.0) config_error("oscillator.lambda_anh", "must be nonnegative");
            s.qnd_bath = detail::parse_qnd_bath(doc, numeric_paths);
            break;
        }
        case ScenarioKind::CatLindblad:
        case ScenarioKind::AnharmonicDissipative:
        case ScenarioKind::QubitSgad: {
            if (s.kind == ScenarioKind::CatLindblad) {
                s.cat.alpha_abs = init.magnitude("alpha_abs", "alpha_sq");
                s.cat.phi0 = init.number_or("phi0", 0.0);
                s.cat.phi_rel = init.number("phi_rel");
            } else if (s.kind == ScenarioKind::AnharmonicDissipative) {
                s.anharmonic.xi_abs = init.magnitude("xi_abs", "xi_sq");
                s.anharmonic.phi0 = init.number_or("phi0", 0.0);
                s.anharmonic.kappa = osc.number("kappa");
            } else {
                s.atom.alpha_p = init.number("alpha_p");
                s.atom.beta_p = init.number_or("beta_p", 0.0);
            }
            s.omega = positive(osc.number_or("omega", 1.0), "oscillator.omega");
            if (!doc.contains("bath") || !doc.at("bath").is_object()) config_error("bath", "a bath object is required");
            ObjectReader bath(doc.at("bath"), "bath", numeric_paths);
            s.gamma0 = positive(bath.number("gamma0"), "bath.gamma0");
            s.temperature = bath.number("temperature");
            if (s.temperature < 0.0) config_error("bath.temperature", "must be nonnegative");
            if (s.kind == ScenarioKind::QubitSgad) {
                s.squeeze_r = bath.number_or("squeeze_r", 0.0);
                s.phi_sq = bath.number_or("phi_sq", 0.0);
                // omega_c does not enter the channel; it is accepted so one bath block serves both qubit scenarios.
                bath.number_or("omega_c", 0.0);
            }
            bath.finish();
            s.anharmonic.gamma0 = s.gamma0;
            s.anharmonic.omega = s.omega;
            s.anharmonic.temperature = s.temperature;
            break;
        }
        case ScenarioKind::QubitPhaseDamping: {
            s.atom.alpha_p = init.number("alpha_p");
            s.atom.beta_p = init.number_or("beta_p", 0.0);
            s.omega = positive(osc.number_or("omega", 1.0), "oscillator.omega");
            s.qnd_bath = detail::parse_qnd_bath(doc, numeric_paths);
            break;
        }
    }
    if (is_qubit(s.kind)) {
        if (!(s.atom.alpha_p >= 0.0 && s.atom.alpha_p <= std::numbers::pi)) {
            config_error("initial_state.alpha_p", "must lie in [0, pi]");
        }
        if (!(s.atom.beta_p >= 0.0 && s.atom.beta_p < kTwoPi)) config_error("initial_state.beta_p", "must lie in [0, 2 pi)");
    }
    init.finish();
    osc.finish();
    s.numerics = detail::parse_numerics(doc, numeric_paths);
    return s;
}

namespace detail {

inline Sweep parse_sweep(const json& doc, const std::set<std::string>& numeric_paths) {
    if (!doc.contains("sweep")) config_error("sweep", "required field is missing");
    const json& obj = doc.at("sweep");
    ObjectReader r(obj, "sweep", nullptr);
    Sweep sw;
    if (!r.has("parameter") || !r.raw("parameter").is_string()) config_error("sweep.parameter", "expected a string");
    sw.parameter = obj.at("parameter").get<std::string>();
    if (!numeric_paths.count(sw.parameter)) {
        config_error("sweep.parameter", "'" + sw.parameter + "' is not a numeric field of this scenario");
    }
    if (r.has("values")) {
        if (r.has("start") || r.has("stop") || r.has("n_steps")) {
            config_error("sweep.values", "give either values or start/stop/n_steps");
        }
        const json& v = r.raw("values");
        if (!v.is_array()) config_error("sweep.values", "expected an array of numbers");
        for (const json& x : v) {
            if (!x.is_number()) config_error("sweep.values", "expected an array of numbers");
            sw.values.push_back(x.get<double>());
        }
        if (sw.values.size() < 2) config_error("sweep.values", "needs at least 2 entries");
        std::sort(sw.values.begin(), sw.values.end());
    } else {
        const double start = r.number("start");
        const double stop = r.number("stop");
        const json& n = r.raw("n_steps");
        if (!n.is_number_integer() || n.get<long long>() < 2) config_error("sweep.n_steps", "expected an integer >= 2");
        const auto steps = static_cast<std::size_t>(n.get<long long>());
        for (std::size_t i = 0; i < steps; ++i) {
            sw.values.push_back(start + (stop - start) * static_cast<double>(i) / static_cast<double>(steps - 1));
        }
        if (stop < start) std::reverse(sw.values.begin(), sw.values.end());
    }
    r.finish();
    return sw;
}

}  // namespace detail

/// Sets the dotted `path` in a copy of `doc` to `value`.
inline json with_value(const json& doc, const std::string& path, double value) {
    json copy = doc;
    json* node = &copy;
    std::stringstream ss(path);
    std::string part;
    std::vector<std::string> parts;
    while (std::getline(ss, part, '.')) parts.push_back(part);
    for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
        if (!node->contains(parts[i]) || !(*node)[parts[i]].is_object()) {
            detail::config_error(path, "cannot be set; '" + parts[i] + "' is not an object");
        }
        node = &(*node)[parts[i]];
    }
    (*node)[parts.back()] = value;
    // A magnitude may be given directly or squared; setting one form replaces the other.
    static const std::pair<std::string_view, std::string_view> twins[] = {{"alpha_abs", "alpha_sq"},
                                                                           {"xi_abs", "xi_sq"}};
    for (const auto& [a, b] : twins) {
        if (parts.back() == a) node->erase(std::string(b));
        if (parts.back() == b) node->erase(std::string(a));
    }
    return copy;
}

/// Applies a sweep value and re-validates; errors name the swept field.
inline Scenario scenario_at(const ScenarioConfig& cfg, double value) {
    return parse_scenario(with_value(cfg.document, cfg.sweep.parameter, value));
}

inline ScenarioConfig parse_config(const json& doc) {
    ScenarioConfig cfg;
    std::set<std::string> paths;
    cfg.base = parse_scenario(doc, &paths);
    cfg.sweep = detail::parse_sweep(doc, paths);
    cfg.document = doc;
    if (doc.contains("description")) {
        if (!doc.at("description").is_string()) detail::config_error("description", "expected a string");
        cfg.description = doc.at("description").get<std::string>();
    }
    for (double v : cfg.sweep.values) scenario_at(cfg, v);
    return cfg;
}

inline json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorCode::IoError, "cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        fail(ErrorCode::ConfigError, path + ": " + e.what());
    }
}

inline ScenarioConfig load_config(const std::string& path) { return parse_config(read_json_file(path)); }

}  // namespace numphase::runner
