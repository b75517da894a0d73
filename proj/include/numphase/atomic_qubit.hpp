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
#include <numbers>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "numphase/bathkernel.hpp"
#include "numphase/distributions.hpp"
#include "numphase/errors.hpp"
#include "numphase/infomeasure.hpp"
#include "numphase/specfun.hpp"

// Spin-1/2 system, H = (omega/2) sigma_z, prepared in an atomic coherent state.
// Number labels m = -1/2, +1/2 are stored at indices 0, 1.

namespace numphase {

struct AtomicCoherentState {
    double alpha_p = 0.0;  // polar angle in [0, pi]
    double beta_p = 0.0;   // azimuth in [0, 2 pi)
    double j = 0.5;

    void validate() const {
        if (!(alpha_p >= 0.0 && alpha_p <= std::numbers::pi)) fail(ErrorCode::DomainError, "alpha_p must lie in [0, pi]");
        if (!(beta_p >= 0.0 && beta_p < kTwoPi)) fail(ErrorCode::DomainError, "beta_p must lie in [0, 2 pi)");
        if (j != 0.5) fail(ErrorCode::DomainError, "only j = 1/2 has a phase distribution here");
    }
};

using QubitChannelOutput = ScenarioOutput;

/// Binomial Dicke-basis distribution C(2j, j+m) sin^{2(j+m)}(a/2) cos^{2(j-m)}(a/2), m = -j..j.
inline std::vector<double> dicke_number_distribution(unsigned two_j, double alpha_p) {
    std::vector<double> p(two_j + 1);
    const double s2 = std::pow(std::sin(0.5 * alpha_p), 2);
    const double c2 = std::pow(std::cos(0.5 * alpha_p), 2);
    for (unsigned k = 0; k <= two_j; ++k) {  // k = j + m
        const double logc = log_factorial(two_j) - log_factorial(k) - log_factorial(two_j - k);
        p[k] = std::exp(logc) * std::pow(s2, static_cast<double>(k)) * std::pow(c2, static_cast<double>(two_j - k));
    }
    return p;
}

namespace detail {

inline QubitChannelOutput qubit_output(double alpha_p, std::vector<double> phase, double imag_residual) {
    return finalize_output(dicke_number_distribution(1, alpha_p), 0.0, std::move(phase), imag_residual, -0.5);
}

/// sinh(z t)/z, continuous through z = 0.
inline Complex sinh_over(Complex z, double t) {
    const Complex zt = z * t;
    if (std::abs(zt) < 1e-4) {
        const Complex z2 = zt * zt;
        return t * (1.0 + z2 / 6.0 + z2 * z2 / 120.0);
    }
    return std::sinh(zt) / z;
}

}  // namespace detail

/// Pure dephasing: p(m) is untouched, the single phase harmonic decays as e^{-omega^2 gamma(t)}.
inline QubitChannelOutput qubit_phase_damping(const AtomicCoherentState& state, double omega,
                                              const std::optional<QndBathConfig>& bath, double t,
                                              std::size_t grid_points = kDefaultGridPoints) {
    state.validate();
    if (!(t >= 0.0)) fail(ErrorCode::DomainError, "evolution time must be nonnegative");
    double decay = 1.0;
    if (bath && t > 0.0) {
        bath->validate();
        decay = std::exp(-omega * omega * gamma_decoherence(t, *bath));
    }
    const double amp = 0.25 * std::numbers::pi * std::sin(state.alpha_p) * decay;
    std::vector<double> v(grid_points);
    for (std::size_t k = 0; k < grid_points; ++k) {
        const double phi = PeriodicGrid::theta_at(k, grid_points);
        v[k] = (1.0 + amp * std::cos(state.beta_p + omega * t - phi)) / kTwoPi;
    }
    return detail::qubit_output(state.alpha_p, std::move(v), 0.0);
}

inline QubitChannelOutput qubit_noiseless(const AtomicCoherentState& state, std::size_t grid_points = kDefaultGridPoints) {
    return qubit_phase_damping(state, 1.0, std::nullopt, 0.0, grid_points);
}

inline constexpr double kRealnessTol = 1e-10;

/// Squeezed generalized amplitude damping channel.
inline QubitChannelOutput qubit_sgad(const AtomicCoherentState& state, double omega, const SgadParams& sgad, double gamma0,
                                     double t, std::size_t grid_points = kDefaultGridPoints) {
    state.validate();
    if (!(t >= 0.0)) fail(ErrorCode::DomainError, "evolution time must be nonnegative");
    const double s2 = std::pow(std::sin(0.5 * state.alpha_p), 2);
    const double c2 = std::pow(std::cos(0.5 * state.alpha_p), 2);
    const double gb = sgad.gamma_beta;
    const double decay = std::exp(-gb * t);
    const double p_up = 0.5 * ((1.0 - gamma0 / gb) + (1.0 + gamma0 / gb) * decay) * s2 +
                        sgad.gamma_minus / gb * (-std::expm1(-gb * t)) * c2;

    const Complex ch = std::cosh(sgad.alpha_c * t);
    const Complex so = detail::sinh_over(sgad.alpha_c, t);
    const double env = 0.25 * std::numbers::pi * std::sin(state.alpha_p) * std::exp(-0.5 * gb * t);
    std::vector<double> v(grid_points);
    double imag = 0.0;
    for (std::size_t k = 0; k < grid_points; ++k) {
        const double phi = PeriodicGrid::theta_at(k, grid_points);
        const Complex bracket = ch * std::cos(phi - state.beta_p) + omega * so * std::sin(phi - state.beta_p) -
                                gamma0 * sgad.chi_abs * so * std::cos(sgad.phi_sq + state.beta_p + phi);
        const Complex val = (1.0 + env * bracket) / kTwoPi;
        v[k] = val.real();
        imag = std::max(imag, std::abs(val.imag()));
    }
    if (imag > kRealnessTol) {
        fail(ErrorCode::NonRealDistribution, "SGAD phase distribution has imaginary part " + std::to_string(imag));
    }
    QubitChannelOutput out = finalize_output({1.0 - p_up, p_up}, 0.0, std::move(v), imag, -0.5);
    return out;
}

struct NoiselessChannel {};

struct PhaseDampingChannel {
    double omega = 1.0;
    std::optional<QndBathConfig> bath;
    double t = 0.0;
};

struct SgadChannel {
    double omega = 1.0;
    double gamma0 = 0.025;
    double temperature = 0.0;
    double r = 0.0;
    double phi_sq = 0.0;
    double t = 0.0;
};

using QubitChannel = std::variant<NoiselessChannel, PhaseDampingChannel, SgadChannel>;

inline QubitChannelOutput evaluate_qubit(const AtomicCoherentState& state, const QubitChannel& channel,
                                         std::size_t grid_points = kDefaultGridPoints) {
    struct Visitor {
        const AtomicCoherentState& s;
        std::size_t n;
        QubitChannelOutput operator()(const NoiselessChannel&) const { return qubit_noiseless(s, n); }
        QubitChannelOutput operator()(const PhaseDampingChannel& c) const {
            return qubit_phase_damping(s, c.omega, c.bath, c.t, n);
        }
        QubitChannelOutput operator()(const SgadChannel& c) const {
            return qubit_sgad(s, c.omega, sgad_params(c.omega, c.gamma0, c.temperature, c.r, c.phi_sq), c.gamma0, c.t, n);
        }
    };
    return std::visit(Visitor{state, grid_points}, channel);
}

/// Largest mu keeping H - mu R >= 0 over pure qubit states. The noiseless phase
/// distribution does not depend on beta', so only alpha' is scanned.
inline MuSearchResult mu_search_qubit(double tol, const MuSearchOptions& opts = {},
                                      std::size_t grid_points = kDefaultGridPoints) {
    auto family = [grid_points](double a) {
        AtomicCoherentState s{std::clamp(a, 0.0, std::numbers::pi), 0.0};
        const QubitChannelOutput out = qubit_noiseless(s, grid_points);
        return EntropyPair{shannon_entropy(out.number), phase_knowledge(out.phase)};
    };
    return mu_search(family, tol, opts);
}

/// mu for d = 2, recomputed once per process.
inline double qubit_mu() {
    static const double mu = mu_search_qubit(1e-8).mu;
    return mu;
}

/// Max over the Bloch sphere of the noiseless phase knowledge.
inline double qubit_max_phase_knowledge(std::size_t grid_points = kDefaultGridPoints) {
    double best = 0.0;
    const std::size_t n = 2049;
    for (std::size_t i = 0; i < n; ++i) {
        const double a = std::numbers::pi * static_cast<double>(i) / static_cast<double>(n - 1);
        best = std::max(best, phase_knowledge(qubit_noiseless({a, 0.0}, grid_points).phase));
    }
    return best;
}

struct QuasiMubRow {
    double alpha_p;
    double beta_p;
    double h_bits;
    double r_bits;
    double x_bits;
    double xmu_bits;
    bool max_phase_knowledge;  // MXK state of phi
    bool min_number_knowledge; // MNK state of m, H = log2 d
};

struct QuasiMubTable {
    std::vector<QuasiMubRow> rows;
    double mu;
    bool coincide;  // MXK states of phi are exactly the MNK states of m
};

/// Scans alpha' over [0, pi] at fixed beta' and flags the extremal-knowledge states.
inline QuasiMubTable quasi_mub_scan(const QubitChannel& channel, std::size_t scan_density, double mu,
                                    double beta_p = 0.0, std::size_t grid_points = kDefaultGridPoints) {
    if (scan_density < 64) fail(ErrorCode::DomainError, "scan_density must be at least 64");
    if (!(mu > 0.0)) fail(ErrorCode::DomainError, "mu must be positive");
    QuasiMubTable table{{}, mu, true};
    table.rows.reserve(scan_density);
    double r_max = -1.0;
    double h_max = -1.0;
    for (std::size_t i = 0; i < scan_density; ++i) {
        const double a = std::numbers::pi * static_cast<double>(i) / static_cast<double>(scan_density - 1);
        const QubitChannelOutput out = evaluate_qubit({a, beta_p}, channel, grid_points);
        const ComplementarityReport rep = entropy_excess(out, mu);
        table.rows.push_back({a, beta_p, rep.number_entropy_bits, rep.phase_knowledge_bits, rep.excess_bits,
                              rep.weighted_excess_bits, false, false});
        r_max = std::max(r_max, rep.phase_knowledge_bits);
        h_max = std::max(h_max, rep.number_entropy_bits);
    }
    constexpr double tie = 1e-9;
    for (QuasiMubRow& row : table.rows) {
        row.max_phase_knowledge = row.r_bits >= r_max - tie;
        row.min_number_knowledge = row.h_bits >= h_max - tie;
        if (row.max_phase_knowledge != row.min_number_knowledge) table.coincide = false;
    }
    return table;
}

/// The role-swapped excess X[phi, m] = h(P) - R[m], with h the differential
/// phase entropy in bits and R[m] = log2 d - H[m].
inline double swapped_excess(const QubitChannelOutput& out) {
    const double h_phase = std::log2(kTwoPi) - phase_knowledge(out.phase);
    const double r_number = discrete_knowledge(out.number.probs, out.number.probs.size());
    return h_phase - r_number;
}

}  // namespace numphase
