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
#include <chrono>
#include <cmath>
#include <filesystem>
#include <functional>
#include <map>
#include <numbers>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "numphase/atomic_qubit.hpp"
#include "numphase/infomeasure.hpp"
#include "numphase/runner/config.hpp"
#include "numphase/runner/emit.hpp"
#include "numphase/runner/sweep.hpp"

namespace numphase::runner {

struct Check {
    int criterion;  // acceptance criterion this check belongs to
    std::string name;
    bool passed;
    std::string detail;
};

struct VerifyReport {
    std::vector<Check> checks;

    bool passed() const {
        return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
    }

    void add(int criterion, std::string name, bool ok, std::string detail) {
        checks.push_back({criterion, std::move(name), ok, std::move(detail)});
    }

    void append(const VerifyReport& other) { checks.insert(checks.end(), other.checks.begin(), other.checks.end()); }

    void print(std::ostream& os) const {
        for (const Check& c : checks) os << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.detail << '\n';
    }
};

// Pinned expectations.
inline constexpr double kExpectedMu = 4.085;
inline constexpr double kMuTol = 0.02;
inline constexpr double kExpectedRPhi = 0.245;
inline constexpr double kRPhiTol = 0.005;
inline constexpr double kConstantsBudgetSeconds = 30.0;
inline constexpr double kExcessFloor = -1e-6;
inline constexpr double kWeightedExcessFloor = -1e-3;
inline constexpr double kQndInvarianceTol = 1e-12;
inline constexpr double kDiscreteIdentityTol = 1e-10;
inline constexpr double kConvergenceTol = 1e-5;
inline constexpr double kInvariantsBudgetSeconds = 600.0;
inline constexpr double kFiguresBudgetSeconds = 600.0;
inline constexpr std::size_t kDefaultDraws = 1000;
inline constexpr std::uint64_t kDefaultSeed = 20260101;

namespace detail {

inline double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

inline std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

}  // namespace detail

inline VerifyReport constants_checks() {
    VerifyReport rep;
    const auto t0 = std::chrono::steady_clock::now();
    const MuSearchResult mu = mu_search_qubit(1e-8);
    const double r_phi = qubit_max_phase_knowledge();
    const double elapsed = detail::seconds_since(t0);
    rep.add(1, "constants.mu", std::abs(mu.mu - kExpectedMu) <= kMuTol,
            "mu = " + detail::fmt(mu.mu) + " at alpha' = " + detail::fmt(mu.argmin) + ", expected " +
                detail::fmt(kExpectedMu) + " +- " + detail::fmt(kMuTol));
    rep.add(1, "constants.r_phi", std::abs(r_phi - kExpectedRPhi) <= kRPhiTol,
            "r_phi = " + detail::fmt(r_phi) + " bits, expected " + detail::fmt(kExpectedRPhi) + " +- " +
                detail::fmt(kRPhiTol));
    rep.add(1, "constants.runtime", elapsed < kConstantsBudgetSeconds, detail::fmt(elapsed) + " s");
    return rep;
}

/// Random valid scenario draws used by the property sweeps.
class ScenarioSampler {
   public:
    explicit ScenarioSampler(std::uint64_t seed) : rng_(seed) {}

    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
    bool coin() { return uniform(0.0, 1.0) < 0.5; }

    QndBathConfig qnd_bath() {
        QndBathConfig b;
        b.gamma0 = uniform(1e-3, 0.1);
        b.omega_c = uniform(10.0, 200.0);
        b.temperature = coin() ? 0.0 : uniform(0.0, 5.0);
        b.squeeze_r = uniform(0.0, 2.0);
        b.squeeze_a = 0.0;
        return b;
    }

    Scenario draw(ScenarioKind kind) {
        Scenario s;
        s.kind = kind;
        s.numerics.grid_points = 512;
        s.coherent.theta0 = uniform(0.0, kTwoPi);
        s.evolution_time = uniform(0.0, 2.0);
        switch (kind) {
            case ScenarioKind::CoherentQnd:
                s.coherent.alpha_abs = uniform(0.0, 3.0);
                break;
            case ScenarioKind::SqueezedCoherentQnd:
                s.coherent.alpha_abs = uniform(0.0, 2.5);
                s.r1 = uniform(0.05, 1.0);
                s.psi = uniform(0.0, kTwoPi);
                break;
            case ScenarioKind::KerrQnd:
                s.coherent.alpha_abs = uniform(0.0, 2.5);
                s.chi_kerr = uniform(0.0, 0.3);
                s.lambda_anh = uniform(0.0, 0.05);
                break;
            case ScenarioKind::SqueezedKerrQnd:
                s.coherent.alpha_abs = uniform(0.0, 2.0);
                s.chi_kerr = uniform(0.0, 0.3);
                s.lambda_anh = uniform(0.0, 0.05);
                s.r1 = uniform(0.05, 0.8);
                s.psi = uniform(0.0, kTwoPi);
                break;
            case ScenarioKind::CatLindblad:
                s.cat = {uniform(0.2, 2.0), uniform(0.0, kTwoPi), uniform(0.0, kTwoPi)};
                s.gamma0 = uniform(1e-3, 0.1);
                s.temperature = coin() ? 0.0 : uniform(0.0, 3.0);
                s.evolution_time = uniform(0.0, 5.0);
                break;
            case ScenarioKind::AnharmonicDissipative:
                s.anharmonic.xi_abs = uniform(0.2, 1.6);
                s.anharmonic.phi0 = uniform(0.0, kTwoPi);
                s.anharmonic.kappa = uniform(0.0, 0.1);
                s.anharmonic.gamma0 = s.gamma0 = uniform(1e-3, 0.05);
                s.anharmonic.temperature = s.temperature = coin() ? 0.0 : uniform(0.0, 1.0);
                s.evolution_time = uniform(0.0, 10.0);
                break;
            case ScenarioKind::QubitPhaseDamping:
                s.atom = {uniform(0.0, std::numbers::pi), uniform(0.0, kTwoPi)};
                s.omega = uniform(0.5, 2.0);
                break;
            case ScenarioKind::QubitSgad:
                s.atom = {uniform(0.0, std::numbers::pi), uniform(0.0, kTwoPi)};
                s.omega = uniform(0.5, 2.0);
                s.gamma0 = uniform(1e-3, 0.1);
                s.temperature = uniform(0.0, 10.0);
                s.squeeze_r = uniform(0.0, 1.5);
                s.phi_sq = uniform(0.0, kTwoPi);
                s.evolution_time = uniform(0.0, 5.0);
                break;
        }
        const bool qnd = kind == ScenarioKind::CoherentQnd || kind == ScenarioKind::SqueezedCoherentQnd ||
                         kind == ScenarioKind::KerrQnd || kind == ScenarioKind::SqueezedKerrQnd ||
                         kind == ScenarioKind::QubitPhaseDamping;
        if (qnd && coin()) s.qnd_bath = qnd_bath();
        return s;
    }

   private:
    std::mt19937_64 rng_;
};

inline constexpr ScenarioKind kAllScenarios[] = {
    ScenarioKind::CoherentQnd,  ScenarioKind::SqueezedCoherentQnd,   ScenarioKind::KerrQnd,
    ScenarioKind::SqueezedKerrQnd, ScenarioKind::CatLindblad,      ScenarioKind::AnharmonicDissipative,
    ScenarioKind::QubitPhaseDamping, ScenarioKind::QubitSgad,
};

/// Criterion 2: X >= floor over random draws of every scenario.
inline VerifyReport excess_checks(std::size_t draws = kDefaultDraws, std::uint64_t seed = kDefaultSeed) {
    VerifyReport rep;
    ScenarioSampler sampler(seed);
    for (ScenarioKind kind : kAllScenarios) {
        double worst = std::numeric_limits<double>::infinity();
        std::size_t errors = 0;
        std::string first_error;
        for (std::size_t i = 0; i < draws; ++i) {
            const Scenario s = sampler.draw(kind);
            try {
                const ComplementarityReport r = entropy_excess(evaluate(s).output);
                worst = std::min(worst, r.excess_bits);
            } catch (const Error& e) {
                if (errors++ == 0) first_error = e.what();
            }
        }
        std::string detail = "min X = " + detail::fmt(worst) + " bits over " + std::to_string(draws) + " draws";
        if (errors) detail += "; " + std::to_string(errors) + " draws raised, first: " + first_error;
        rep.add(2, "invariants.excess." + std::string(scenario_name(kind)), errors == 0 && worst >= kExcessFloor,
                detail);
    }
    return rep;
}

/// Criterion 3: X_mu >= floor for the noiseless qubit and both qubit channels.
inline VerifyReport weighted_excess_checks(std::size_t draws = kDefaultDraws, std::uint64_t seed = kDefaultSeed + 1) {
    VerifyReport rep;
    ScenarioSampler sampler(seed);
    const double mu = qubit_mu();
    struct Case {
        const char* name;
        ScenarioKind kind;
        bool noiseless;
    };
    const Case cases[] = {{"noiseless", ScenarioKind::QubitPhaseDamping, true},
                          {"phase_damping", ScenarioKind::QubitPhaseDamping, false},
                          {"sgad", ScenarioKind::QubitSgad, false}};
    for (const Case& c : cases) {
        double worst = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < draws; ++i) {
            Scenario s = sampler.draw(c.kind);
            if (c.noiseless) {
                s.qnd_bath.reset();
                s.evolution_time = 0.0;
            } else if (c.kind == ScenarioKind::QubitPhaseDamping && !s.qnd_bath) {
                s.qnd_bath = sampler.qnd_bath();
            }
            worst = std::min(worst, entropy_excess(evaluate(s).output, mu).weighted_excess_bits);
        }
        rep.add(3, std::string("invariants.weighted_excess.") + c.name, worst >= kWeightedExcessFloor,
                "min X_mu = " + detail::fmt(worst) + " bits with mu = " + detail::fmt(mu));
    }
    return rep;
}

/// Criterion 4: p(m) under QND coupling equals the t = 0 distribution entry-wise.
inline VerifyReport qnd_invariance_checks(std::size_t draws = 200, std::uint64_t seed = kDefaultSeed + 2) {
    VerifyReport rep;
    ScenarioSampler sampler(seed);
    const ScenarioKind kinds[] = {ScenarioKind::CoherentQnd, ScenarioKind::SqueezedCoherentQnd, ScenarioKind::KerrQnd,
                                  ScenarioKind::SqueezedKerrQnd, ScenarioKind::QubitPhaseDamping};
    for (ScenarioKind kind : kinds) {
        double worst = 0.0;
        for (std::size_t i = 0; i < draws; ++i) {
            Scenario s = sampler.draw(kind);
            s.qnd_bath = sampler.qnd_bath();
            s.evolution_time = sampler.uniform(0.01, 2.0);
            Scenario s0 = s;
            s0.qnd_bath.reset();
            s0.evolution_time = 0.0;
            const Evaluation e0 = evaluate(s0);
            const ScenarioOutput e1 = evaluate_fixed(s, e0.n_max_used, e0.grid_used);
            const auto& p0 = e0.output.number.probs;
            const auto& p1 = e1.number.probs;
            if (p0.size() != p1.size()) {
                worst = std::numeric_limits<double>::infinity();
                continue;
            }
            for (std::size_t k = 0; k < p0.size(); ++k) worst = std::max(worst, std::abs(p0[k] - p1[k]));
        }
        rep.add(4, "invariants.qnd_number." + std::string(scenario_name(kind)), worst <= kQndInvarianceTol,
                "max |p_t(m) - p_0(m)| = " + detail::fmt(worst));
    }
    return rep;
}

/// Criterion 7: X(A,B) = H(A) + H(B) - log2 d, and X(A,B) = X(B,A).
inline VerifyReport discrete_identity_checks(std::size_t pairs = kDefaultDraws, std::uint64_t seed = kDefaultSeed + 3) {
    VerifyReport rep;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> dim(2, 16);
    std::exponential_distribution<double> expo(1.0);
    auto draw = [&](std::size_t d) {
        std::vector<double> p(d);
        double s = 0.0;
        for (double& v : p) s += (v = expo(rng));
        for (double& v : p) v /= s;
        return p;
    };
    double identity = 0.0;
    double symmetry = 0.0;
    for (std::size_t i = 0; i < pairs; ++i) {
        const std::size_t d = dim(rng);
        const std::vector<double> a = draw(d);
        const std::vector<double> b = draw(d);
        const double xab = discrete_excess_pair(a, b, d);
        const double xba = discrete_excess_pair(b, a, d);
        const double expect = shannon_entropy(a) + shannon_entropy(b) - std::log2(static_cast<double>(d));
        identity = std::max(identity, std::abs(xab - expect));
        symmetry = std::max(symmetry, std::abs(xab - xba));
    }
    rep.add(7, "invariants.discrete_identity", identity <= kDiscreteIdentityTol,
            "max deviation " + detail::fmt(identity) + " over " + std::to_string(pairs) + " pairs");
    rep.add(7, "invariants.discrete_symmetry", symmetry <= kDiscreteIdentityTol, "max |X(A,B) - X(B,A)| = " + detail::fmt(symmetry));
    return rep;
}

inline VerifyReport invariant_checks(std::size_t draws = kDefaultDraws, std::uint64_t seed = kDefaultSeed) {
    const auto t0 = std::chrono::steady_clock::now();
    VerifyReport rep = excess_checks(draws, seed);
    const double elapsed = detail::seconds_since(t0);
    rep.add(2, "invariants.excess.runtime", elapsed < kInvariantsBudgetSeconds, detail::fmt(elapsed) + " s");
    rep.append(weighted_excess_checks(draws, seed + 1));
    rep.append(qnd_invariance_checks(200, seed + 2));
    rep.append(discrete_identity_checks(draws, seed + 3));
    return rep;
}

// --- figure suite ----------------------------------------------------------

inline constexpr const char* kFigureNames[] = {"fig1a", "fig1b", "fig2a", "fig2b", "fig3",  "fig4a", "fig4b", "fig5a",
                                               "fig5b", "fig6a", "fig6b", "fig7a", "fig7b", "fig8",  "fig9"};

struct FigureData {
    ScenarioConfig config;
    std::vector<SweepRow> rows;
};

using FigureSet = std::map<std::string, FigureData>;

inline FigureSet run_figures(const std::filesystem::path& figures_dir) {
    FigureSet set;
    for (const char* name : kFigureNames) {
        const std::filesystem::path p = figures_dir / (std::string(name) + ".json");
        ScenarioConfig cfg = load_config(p.string());
        std::vector<SweepRow> rows = run_sweep(cfg);
        set.emplace(name, FigureData{std::move(cfg), std::move(rows)});
    }
    return set;
}

inline void write_figures(const FigureSet& set, const std::filesystem::path& out_dir) {
    std::filesystem::create_directories(out_dir);
    for (const auto& [name, data] : set) {
        write_file((out_dir / (name + ".csv")).string(), [&](std::ostream& os) { write_csv(os, data.rows); });
    }
}

namespace detail {

using Column = std::function<double(const SweepRow&)>;

inline double col_h(const SweepRow& r) { return r.report.number_entropy_bits; }
inline double col_r(const SweepRow& r) { return r.report.phase_knowledge_bits; }
inline double col_x(const SweepRow& r) { return r.report.excess_bits; }
inline double col_xmu(const SweepRow& r) { return r.report.weighted_excess_bits; }

inline double spread(const SweepRow& r) {
    const auto v = r.output.phase.grid.values();
    const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
    return *hi - *lo;
}

/// Largest violation of strict increase (positive means violated); sign flips for decrease.
inline double monotone_violation(const std::vector<SweepRow>& rows, const Column& col, bool increasing) {
    double worst = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const double step = col(rows[i]) - col(rows[i - 1]);
        worst = std::max(worst, increasing ? -step : step);
    }
    return worst;
}

/// max over matched rows of (col(a) - col(b)); the check a <= b passes when this is <= slack
inline double max_gap(const std::vector<SweepRow>& a, const std::vector<SweepRow>& b, const Column& col) {
    if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
    double worst = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].swept_value != b[i].swept_value) return std::numeric_limits<double>::infinity();
        worst = std::max(worst, col(a[i]) - col(b[i]));
    }
    return worst;
}

inline double max_abs_gap(const std::vector<SweepRow>& a, const std::vector<SweepRow>& b, const Column& col) {
    return std::max(max_gap(a, b, col), max_gap(b, a, col));
}

}  // namespace detail

inline VerifyReport figure_assertions(const FigureSet& f) {
    using namespace detail;
    VerifyReport rep;
    auto rows = [&](const char* n) -> const std::vector<SweepRow>& { return f.at(n).rows; };

    {
        const double h = monotone_violation(rows("fig1a"), col_h, true);
        const double r = monotone_violation(rows("fig1a"), col_r, true);
        double xmin = std::numeric_limits<double>::infinity();
        for (const SweepRow& row : rows("fig1a")) xmin = std::min(xmin, row.report.excess_bits);
        rep.add(5, "fig1a.H_increasing", h < 0.0, "largest step against the trend " + fmt(h));
        rep.add(5, "fig1a.R_increasing", r < 0.0, "largest step against the trend " + fmt(r));
        rep.add(5, "fig1a.X_nonnegative", xmin >= kExcessFloor, "min X = " + fmt(xmin));
    }
    {
        const double g = max_gap(rows("fig1b"), rows("fig1a"), col_r);
        rep.add(5, "fig1b.R_below_fig1a", g < 0.0, "max R(1b) - R(1a) = " + fmt(g));
    }
    {
        const double g = max_gap(rows("fig2a"), rows("fig2b"), col_r);
        rep.add(5, "fig2.R_T1_above_T0", g < 0.0, "max R(T=0) - R(T=1) = " + fmt(g));
    }
    {
        const double r = monotone_violation(rows("fig3"), col_r, false);
        rep.add(5, "fig3.R_decreasing", r < 0.0, "largest step against the trend " + fmt(r));
        double dev = 0.0;
        const auto& base = rows("fig3").front().output.number.probs;
        for (const SweepRow& row : rows("fig3")) {
            const auto& p = row.output.number.probs;
            if (p.size() != base.size()) {
                dev = std::numeric_limits<double>::infinity();
                break;
            }
            for (std::size_t k = 0; k < p.size(); ++k) dev = std::max(dev, std::abs(p[k] - base[k]));
        }
        rep.add(5, "fig3.p_chi_invariant", dev <= kQndInvarianceTol, "max |p(m) - p_first(m)| = " + fmt(dev));
    }
    {
        double worst = 0.0;
        for (const SweepRow& row : rows("fig4a")) worst = std::max(worst, std::abs(row.report.excess_bits));
        rep.add(5, "fig4a.X_small", worst < 0.2, "max |X| = " + fmt(worst) + " bits, bound 0.2");
    }
    {
        const auto& a = rows("fig5a");
        std::size_t argmin = 0;
        std::size_t at_pi = 0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i].report.excess_bits < a[argmin].report.excess_bits) argmin = i;
            if (std::abs(a[i].swept_value - std::numbers::pi) < std::abs(a[at_pi].swept_value - std::numbers::pi)) at_pi = i;
        }
        rep.add(5, "fig5a.X_min_at_0", a[argmin].swept_value == 0.0,
                "argmin phi = " + fmt(a[argmin].swept_value) + ", X = " + fmt(a[argmin].report.excess_bits));
        rep.add(5, "fig5a.X_pi_above_X_0", a[at_pi].report.excess_bits > a.front().report.excess_bits,
                "X(pi) = " + fmt(a[at_pi].report.excess_bits) + ", X(0) = " + fmt(a.front().report.excess_bits));
        const double g = max_gap(rows("fig5a"), rows("fig5b"), col_x);
        rep.add(5, "fig5b.X_above_fig5a", g <= 0.0, "max X(5a) - X(5b) = " + fmt(g));
    }
    {
        const double dh = max_abs_gap(rows("fig6a"), rows("fig6b"), col_h);
        rep.add(5, "fig6.H_invariant", dh <= kQndInvarianceTol, "max |H(6b) - H(6a)| = " + fmt(dh));
        const double gh = max_gap(rows("fig7a"), rows("fig7b"), col_h);
        const double gr = max_gap(rows("fig7b"), rows("fig7a"), col_r);
        const double gx = max_gap(rows("fig7a"), rows("fig7b"), col_xmu);
        rep.add(5, "fig7.H_not_below_r0", gh <= kQndInvarianceTol, "max H(r=0) - H(r=1) = " + fmt(gh));
        rep.add(5, "fig7.R_not_above_r0", gr <= kQndInvarianceTol, "max R(r=1) - R(r=0) = " + fmt(gr));
        rep.add(5, "fig7.Xmu_not_below_r0", gx <= kQndInvarianceTol, "max X_mu(r=0) - X_mu(r=1) = " + fmt(gx));
    }
    {
        std::vector<SweepRow> later;
        std::string spreads;
        for (const SweepRow& row : rows("fig8")) {
            spreads += (spreads.empty() ? "" : ", ") + ("t=" + fmt(row.swept_value) + ": " + fmt(spread(row)));
            if (row.swept_value >= 1.0) later.push_back(row);
        }
        const double v = monotone_violation(later, spread, false);
        rep.add(5, "fig8.spread_decreasing", later.size() == 3 && v < 0.0, "max - min of P: " + spreads);
    }
    {
        const double v = monotone_violation(rows("fig9"), col_x, true);
        rep.add(5, "fig9.X_increasing", v < 0.0, "largest step against the trend " + fmt(v));
    }
    return rep;
}

/// Criterion 8: every row re-evaluated at twice the cutoff and twice the grid.
inline VerifyReport convergence_checks(const FigureSet& f) {
    VerifyReport rep;
    for (const auto& [name, data] : f) {
        double worst = 0.0;
        std::string where;
        for (const SweepRow& row : data.rows) {
            const Scenario s = scenario_at(data.config, row.swept_value);
            const ComplementarityReport fine =
                entropy_excess(evaluate_fixed(s, 2 * row.n_max_used, 2 * row.grid_used), row.report.mu);
            const double d = std::max({std::abs(fine.number_entropy_bits - row.report.number_entropy_bits),
                                       std::abs(fine.phase_knowledge_bits - row.report.phase_knowledge_bits),
                                       std::abs(fine.excess_bits - row.report.excess_bits)});
            if (d > worst) {
                worst = d;
                where = data.config.sweep.parameter + " = " + detail::fmt(row.swept_value);
            }
        }
        rep.add(8, "convergence." + name, worst < kConvergenceTol,
                "max change " + detail::fmt(worst) + " bits" + (where.empty() ? "" : " at " + where));
    }
    return rep;
}

inline VerifyReport figure_checks(const std::filesystem::path& figures_dir, const std::filesystem::path& out_dir = {},
                                  bool with_convergence = false) {
    VerifyReport rep;
    const auto t0 = std::chrono::steady_clock::now();
    FigureSet set;
    try {
        set = run_figures(figures_dir);
    } catch (const Error& e) {
        rep.add(5, "figures.run", false, e.what());
        return rep;
    }
    if (!out_dir.empty()) write_figures(set, out_dir);
    rep.append(figure_assertions(set));
    const double elapsed = detail::seconds_since(t0);
    rep.add(5, "figures.runtime", elapsed < kFiguresBudgetSeconds, detail::fmt(elapsed) + " s");
    if (with_convergence) rep.append(convergence_checks(set));
    return rep;
}

}  // namespace numphase::runner
