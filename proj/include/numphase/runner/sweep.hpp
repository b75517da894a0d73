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
#include <cstdio>
#include <string>
#include <vector>

#include "numphase/atomic_qubit.hpp"
#include "numphase/dissipative_oscillator.hpp"
#include "numphase/infomeasure.hpp"
#include "numphase/qnd_oscillator.hpp"
#include "numphase/runner/config.hpp"

namespace numphase::runner {

inline constexpr std::size_t kAutoNmaxStart = 16;
inline constexpr std::size_t kAutoNmaxLimit = 1024;

struct Evaluation {
    ScenarioOutput output;
    std::size_t n_max_used;
    std::size_t grid_used;
};

struct SweepRow {
    double swept_value;
    ComplementarityReport report;
    ScenarioOutput output;
    std::size_t n_max_used;
    std::size_t grid_used;
};

/// Smallest grid at least `requested` that resolves every harmonic up to n_max.
inline std::size_t grid_for(std::size_t requested, std::size_t n_max) {
    std::size_t g = requested;
    if (g <= 4 * n_max + 1) {
        g = 1;
        while (g <= 4 * n_max + 1) g <<= 1;
    }
    return std::max(g, requested);
}

/// One scenario at a fixed cutoff and grid.
inline ScenarioOutput evaluate_fixed(const Scenario& s, std::size_t n_max, std::size_t grid) {
    const double t = s.evolution_time;
    OscillatorParams osc;
    osc.omega = s.omega;
    osc.lambda_anh = s.lambda_anh;
    osc.n_max = n_max;
    osc.epsilon_tail = s.numerics.epsilon_tail;
    osc.grid_points = grid;
    Truncation tr{n_max, s.numerics.epsilon_tail, grid};
    switch (s.kind) {
        case ScenarioKind::CoherentQnd:
            return coherent_qnd(s.coherent, osc, s.qnd_bath, t);
        case ScenarioKind::SqueezedCoherentQnd:
            return squeezed_coherent_qnd({s.coherent, s.r1, s.psi}, osc, s.qnd_bath, t);
        case ScenarioKind::KerrQnd:
            return kerr_qnd({s.coherent, s.chi_kerr}, osc, s.qnd_bath, t);
        case ScenarioKind::SqueezedKerrQnd:
            return squeezed_kerr_qnd({{s.coherent, s.chi_kerr}, s.r1, s.psi}, osc, s.qnd_bath, t);
        case ScenarioKind::CatLindblad:
            return cat_lindblad(s.cat, s.omega, s.gamma0, s.temperature, t, tr);
        case ScenarioKind::AnharmonicDissipative:
            return anharmonic_dissipative(s.anharmonic, t, tr);
        case ScenarioKind::QubitPhaseDamping:
            return qubit_phase_damping(s.atom, s.omega, s.qnd_bath, t, grid);
        case ScenarioKind::QubitSgad:
            return qubit_sgad(s.atom, s.omega, sgad_params(s.omega, s.gamma0, s.temperature, s.squeeze_r, s.phi_sq),
                              s.gamma0, t, grid);
    }
    fail(ErrorCode::ConfigError, "unhandled scenario");
}

/// Uses numerics.n_max when given; otherwise doubles the cutoff until the tail check passes.
inline Evaluation evaluate(const Scenario& s, std::size_t n_max_scale = 1, std::size_t grid_scale = 1) {
    if (is_qubit(s.kind)) {
        const std::size_t g = s.numerics.grid_points * grid_scale;
        return {evaluate_fixed(s, 1, g), 1, g};
    }
    if (s.numerics.n_max) {
        const std::size_t n = *s.numerics.n_max * n_max_scale;
        const std::size_t g = grid_for(s.numerics.grid_points, n) * grid_scale;
        return {evaluate_fixed(s, n, g), n, g};
    }
    for (std::size_t n0 = kAutoNmaxStart;; n0 *= 2) {
        const std::size_t n = n0 * n_max_scale;
        const std::size_t g = grid_for(s.numerics.grid_points, n) * grid_scale;
        try {
            return {evaluate_fixed(s, n, g), n, g};
        } catch (const Error& e) {
            if (e.code() != ErrorCode::TailTooHeavy || n0 >= kAutoNmaxLimit) throw;
        }
    }
}

inline double resolved_mu(const Scenario& s) {
    if (s.numerics.mu) return *s.numerics.mu;
    return is_qubit(s.kind) ? qubit_mu() : 1.0;
}

inline std::string format_value(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

/// Evaluates every sweep point in order. Errors carry the failing row.
inline std::vector<SweepRow> run_sweep(const ScenarioConfig& cfg) {
    std::vector<SweepRow> rows;
    rows.reserve(cfg.sweep.values.size());
    for (std::size_t i = 0; i < cfg.sweep.values.size(); ++i) {
        const double v = cfg.sweep.values[i];
        try {
            const Scenario s = scenario_at(cfg, v);
            Evaluation ev = evaluate(s);
            const ComplementarityReport rep = entropy_excess(ev.output, resolved_mu(s));
            rows.push_back({v, rep, std::move(ev.output), ev.n_max_used, ev.grid_used});
        } catch (const Error& e) {
            fail(e.code(), "row " + std::to_string(i) + " (" + cfg.sweep.parameter + " = " + format_value(v) +
                               "): " + e.detail());
        }
    }
    return rows;
}

}  // namespace numphase::runner
