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

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "numphase/bathkernel.hpp"
#include "numphase/distributions.hpp"
#include "numphase/errors.hpp"
#include "numphase/specfun.hpp"

// Oscillators coupled to a squeezed thermal bath through an interaction that
// commutes with the system Hamiltonian. The reduced density matrix in the energy
// basis picks up
//   rho_mn(t) = rho_mn(0) exp[-i(E_m - E_n)t + i(E_m^2 - E_n^2) eta(t) - (E_m - E_n)^2 gamma(t)]
// with E_n = omega (n + 1/2) + (lambda/2) n (n - 1).

namespace numphase {

struct CoherentInit {
    double alpha_abs = 0.0;
    double theta0 = 0.0;
};

struct SqueezedCoherentInit {
    CoherentInit coherent;
    double r1 = 0.0;
    double psi = 0.0;
};

struct KerrInit {
    CoherentInit coherent;
    double chi_kerr = 0.0;
};

struct SqueezedKerrInit {
    KerrInit kerr;
    double r1 = 0.0;
    double psi = 0.0;
};

struct OscillatorParams {
    double omega = 1.0;
    double lambda_anh = 0.0;
    std::size_t n_max = 64;
    double epsilon_tail = 1e-10;
    std::size_t grid_points = kDefaultGridPoints;

    void validate() const {
        if (!(omega > 0.0) || !std::isfinite(omega)) fail(ErrorCode::DomainError, "omega must be positive");
        if (!(lambda_anh >= 0.0) || !std::isfinite(lambda_anh)) {
            fail(ErrorCode::DomainError, "lambda_anh must be nonnegative");
        }
        if (n_max < 1) fail(ErrorCode::DomainError, "n_max must be at least 1");
        if (!(epsilon_tail > 0.0 && epsilon_tail <= 1e-6)) {
            fail(ErrorCode::DomainError, "epsilon_tail must lie in (0, 1e-6]");
        }
        require_alias_free(grid_points, n_max);
    }
};

inline constexpr double kSqueezeMax = 3.0;

/// Inner squeeze sums are checked against this many extra Fock states.
inline constexpr std::size_t kSqueezeExtension = 16;
inline constexpr double kSqueezeExtensionTol = 1e-10;

namespace detail {

inline double fock_energy(std::size_t n, const OscillatorParams& osc) {
    const double nn = static_cast<double>(n);
    return osc.omega * (nn + 0.5) + 0.5 * osc.lambda_anh * nn * (nn - 1.0);
}

inline void check_finite_init(double v, const char* what) {
    if (!std::isfinite(v)) fail(ErrorCode::DomainError, std::string(what) + " must be finite");
}

inline void check_coherent(const CoherentInit& c) {
    check_finite_init(c.alpha_abs, "alpha_abs");
    check_finite_init(c.theta0, "theta0");
    if (c.alpha_abs < 0.0) fail(ErrorCode::DomainError, "alpha_abs must be nonnegative");
}

inline void check_squeeze(double r1, double psi) {
    check_finite_init(psi, "psi");
    if (!(r1 >= 0.0)) fail(ErrorCode::DomainError, "r1 must be nonnegative");
    if (r1 == 0.0) {
        fail(ErrorCode::DegenerateSqueeze, "r1 = 0 makes the squeezed-state closed form singular; use the unsqueezed scenario");
    }
    if (r1 > kSqueezeMax) fail(ErrorCode::DomainError, "r1 must not exceed " + std::to_string(kSqueezeMax));
}

/// 1 - sum |a_n|^2, raising TailTooHeavy when the cutoff drops too much probability.
inline double tail_of(const std::vector<double>& probs, double epsilon, const char* who) {
    CompensatedSum<double> s;
    for (double p : probs) s.add(p);
    const double tail = std::max(0.0, 1.0 - s.value());
    if (tail > epsilon) {
        fail(ErrorCode::TailTooHeavy, std::string(who) + ": truncated probability " + std::to_string(tail) +
                                          " exceeds epsilon_tail; raise n_max");
    }
    return tail;
}

/// exp of the bath and free-evolution phase for each (m, n); identity when no bath and t = 0.
inline Eigen::MatrixXcd qnd_factor(std::size_t dim, const OscillatorParams& osc, const std::optional<QndBathConfig>& bath,
                                   double t) {
    if (!(t >= 0.0)) fail(ErrorCode::DomainError, "evolution time must be nonnegative");
    double eta_t = 0.0;
    double gamma_t = 0.0;
    if (bath && t > 0.0) {
        bath->validate();
        eta_t = eta(t, *bath);
        gamma_t = gamma_decoherence(t, *bath);
    }
    std::vector<double> e(dim);
    for (std::size_t n = 0; n < dim; ++n) e[n] = fock_energy(n, osc);
    Eigen::MatrixXcd f(dim, dim);
    for (std::size_t m = 0; m < dim; ++m) {
        f(m, m) = 1.0;
        for (std::size_t n = m + 1; n < dim; ++n) {
            const double de = e[m] - e[n];
            const double de2 = de * (e[m] + e[n]);
            const Complex v = std::exp(Complex(-de * de * gamma_t, -de * t + de2 * eta_t));
            f(m, n) = v;
            f(n, m) = std::conj(v);
        }
    }
    return f;
}

inline Eigen::MatrixXcd evolved_density(const std::vector<Complex>& amp, const OscillatorParams& osc,
                                        const std::optional<QndBathConfig>& bath, double t) {
    const std::size_t dim = amp.size();
    Eigen::Map<const Eigen::VectorXcd> a(amp.data(), static_cast<Eigen::Index>(dim));
    Eigen::MatrixXcd rho = a * a.adjoint();
    return rho.cwiseProduct(qnd_factor(dim, osc, bath, t));
}

/// sigma_mn = rho_{2m,2n} + rho_{2m+1,2n+1}: keeps only the parity-diagonal blocks.
inline Eigen::MatrixXcd parity_pinch(const Eigen::MatrixXcd& rho) {
    const Eigen::Index pairs = rho.rows() / 2;
    Eigen::MatrixXcd s(pairs, pairs);
    for (Eigen::Index m = 0; m < pairs; ++m) {
        for (Eigen::Index n = 0; n < pairs; ++n) s(m, n) = rho(2 * m, 2 * n) + rho(2 * m + 1, 2 * n + 1);
    }
    return s;
}

inline ScenarioOutput assemble_fock(const std::vector<Complex>& amp, const OscillatorParams& osc,
                                    const std::optional<QndBathConfig>& bath, double t, const char* who) {
    std::vector<double> probs(amp.size());
    for (std::size_t n = 0; n < amp.size(); ++n) probs[n] = std::norm(amp[n]);
    const double tail = tail_of(probs, osc.epsilon_tail, who);
    const PhaseAssembly ph = assemble_phase(evolved_density(amp, osc, bath, t), osc.grid_points, 1);
    return finalize_output(std::move(probs), tail, ph.values, ph.imag_residual);
}

/// Kerr-type families: the number variable is the pair index m of the (2m, 2m+1)
/// sector basis and only same-parity coherences enter the phase distribution.
inline ScenarioOutput assemble_pairs(const std::vector<Complex>& amp, const OscillatorParams& osc,
                                     const std::optional<QndBathConfig>& bath, double t, const char* who) {
    const std::size_t pairs = amp.size() / 2;
    std::vector<double> probs(pairs);
    for (std::size_t m = 0; m < pairs; ++m) probs[m] = std::norm(amp[2 * m]) + std::norm(amp[2 * m + 1]);
    const double tail = tail_of(probs, osc.epsilon_tail, who);
    const Eigen::MatrixXcd sigma = parity_pinch(evolved_density(amp, osc, bath, t));
    const PhaseAssembly ph = assemble_phase(sigma, osc.grid_points, 2);
    return finalize_output(std::move(probs), tail, ph.values, ph.imag_residual);
}

/// Number of sector pairs covering Fock states 0..n_max.
inline std::size_t pair_count(std::size_t n_max) { return (n_max + 2) / 2; }

}  // namespace detail

/// Coherent amplitudes |alpha|^n e^{i n theta0} e^{-|alpha|^2/2} / sqrt(n!) for n = 0..n_max.
inline std::vector<Complex> coherent_amplitudes(const CoherentInit& init, std::size_t n_max) {
    detail::check_coherent(init);
    std::vector<Complex> a(n_max + 1, Complex(0.0));
    if (init.alpha_abs == 0.0) {
        a[0] = 1.0;
        return a;
    }
    const double la = std::log(init.alpha_abs);
    const double half_norm = 0.5 * init.alpha_abs * init.alpha_abs;
    for (std::size_t n = 0; n <= n_max; ++n) {
        const double nn = static_cast<double>(n);
        const double mag = std::exp(nn * la - 0.5 * log_factorial(n) - half_norm);
        a[n] = std::polar(mag, std::remainder(nn * init.theta0, kTwoPi));
    }
    return a;
}

/// Fock amplitudes of S(xi) D(alpha)|0>, xi = r1 e^{i psi}.
inline std::vector<Complex> squeezed_coherent_amplitudes(const SqueezedCoherentInit& init, std::size_t n_max) {
    detail::check_coherent(init.coherent);
    detail::check_squeeze(init.r1, init.psi);
    const double r = init.r1;
    const double th = std::tanh(r);
    const double aa = init.coherent.alpha_abs;
    const Complex z = std::polar(aa / std::sqrt(std::sinh(2.0 * r)), init.coherent.theta0 - 0.5 * init.psi);
    const double envelope =
        std::exp(-0.5 * aa * aa * (1.0 - th * std::cos(2.0 * init.coherent.theta0 - init.psi))) / std::sqrt(std::cosh(r));
    const std::vector<Complex> u = scaled_hermite_sequence(n_max, z, Complex(std::sqrt(th)));
    std::vector<Complex> a(n_max + 1);
    for (std::size_t m = 0; m <= n_max; ++m) {
        a[m] = envelope * std::polar(1.0, std::remainder(0.5 * init.psi * static_cast<double>(m), kTwoPi)) * u[m];
    }
    return a;
}

/// q_n = alpha^n e^{-|alpha|^2/2} e^{-i chi n(n-1)} / sqrt(n!).
inline std::vector<Complex> kerr_amplitudes(const KerrInit& init, std::size_t n_max) {
    detail::check_finite_init(init.chi_kerr, "chi_kerr");
    std::vector<Complex> a = coherent_amplitudes(init.coherent, n_max);
    for (std::size_t n = 0; n <= n_max; ++n) {
        const double nn = static_cast<double>(n);
        a[n] *= std::polar(1.0, -std::remainder(init.chi_kerr * nn * (nn - 1.0), kTwoPi));
    }
    return a;
}

struct SqueezeElement {
    Complex value;
    long double max_abs_term;  // bound on the magnitude of intermediate series terms, prefactor included
};

/// <2m + parity| S(z) |2p + parity> for S(z) = exp[(z a^{+2} - z^* a^2)/2], z = r e^{i psi}.
///
/// The prefactor and hypergeometric series are combined term by term in extended
/// precision so that neither (tanh r / 2)^{m+p} nor (-1/sinh^2 r)^k is formed alone.
inline SqueezeElement squeeze_element(unsigned parity, unsigned m, unsigned p, double r, double psi) {
    if (parity > 1) fail(ErrorCode::DomainError, "parity must be 0 or 1");
    if (!(r > 0.0)) fail(ErrorCode::DegenerateSqueeze, "squeeze element needs r > 0");
    using LD = long double;
    const LD rr = r;
    const LD c = parity == 0 ? 0.5L : 1.5L;
    const LD sh = std::sinh(rr);
    const LD x = -1.0L / (sh * sh);
    const LD log_pref = 0.5L * (std::lgamma(static_cast<LD>(2 * p + parity) + 1.0L) +
                                std::lgamma(static_cast<LD>(2 * m + parity) + 1.0L)) -
                        std::lgamma(static_cast<LD>(p) + 1.0L) - std::lgamma(static_cast<LD>(m) + 1.0L) -
                        (parity == 0 ? 0.5L : 1.5L) * std::log(std::cosh(rr)) +
                        static_cast<LD>(m + p) * std::log(std::tanh(rr) / 2.0L);
    LD term = std::exp(log_pref);
    LD max_abs = std::abs(term);
    CompensatedSum<LD> sum;
    sum.add(term);
    const unsigned terms = std::min(m, p);
    for (unsigned k = 0; k < terms; ++k) {
        const LD kk = k;
        term *= (kk - p) * (kk - m) / ((c + kk) * (kk + 1.0L)) * x;
        max_abs = std::max(max_abs, std::abs(term));
        sum.add(term);
    }
    const double sign = (p % 2 == 0) ? 1.0 : -1.0;
    const double phase = std::remainder((static_cast<double>(m) - static_cast<double>(p)) * psi, kTwoPi);
    const double v = static_cast<double>(sum.value());
    if (!std::isfinite(v)) fail(ErrorCode::Overflow, "squeeze matrix element overflows");
    return {std::polar(sign * v, phase), max_abs};
}

struct SqueezedKerrAmplitudes {
    std::vector<Complex> amp;   // Fock amplitudes s_n, n = 0..2*pairs-1
    double extension_change;    // max |s_n| change when the inner sums gain kSqueezeExtension Fock states
    double rounding_bound;      // worst-case extended-precision rounding in any s_n
};

inline SqueezedKerrAmplitudes squeezed_kerr_amplitudes(const SqueezedKerrInit& init, std::size_t pairs) {
    detail::check_squeeze(init.r1, init.psi);
    const std::size_t ext = kSqueezeExtension / 2;
    const std::size_t inner = pairs + ext;
    const std::vector<Complex> q = kerr_amplitudes(init.kerr, 2 * inner - 1);
    SqueezedKerrAmplitudes out{std::vector<Complex>(2 * pairs, Complex(0.0)), 0.0, 0.0};
    for (unsigned parity = 0; parity <= 1; ++parity) {
        for (std::size_t m = 0; m < pairs; ++m) {
            CompensatedSum<Complex> base, extra;
            long double bound = 0.0L;
            for (std::size_t p = 0; p < inner; ++p) {
                const Complex qp = q[2 * p + parity];
                const SqueezeElement g = squeeze_element(parity, static_cast<unsigned>(m), static_cast<unsigned>(p), init.r1,
                                                         init.psi);
                (p < pairs ? base : extra).add(g.value * qp);
                bound += static_cast<long double>(std::abs(qp)) * g.max_abs_term;
            }
            const Complex head = base.value();
            const Complex tail = extra.value();
            out.amp[2 * m + parity] = head + tail;
            out.extension_change = std::max(out.extension_change, std::abs(tail));
            out.rounding_bound =
                std::max(out.rounding_bound, static_cast<double>(bound * std::numeric_limits<long double>::epsilon()));
        }
    }
    return out;
}

using OptionalBath = std::optional<QndBathConfig>;

inline ScenarioOutput coherent_qnd(const CoherentInit& init, const OscillatorParams& osc, const OptionalBath& bath,
                                   double t) {
    osc.validate();
    return detail::assemble_fock(coherent_amplitudes(init, osc.n_max), osc, bath, t, "coherent_qnd");
}

inline ScenarioOutput squeezed_coherent_qnd(const SqueezedCoherentInit& init, const OscillatorParams& osc,
                                            const OptionalBath& bath, double t) {
    osc.validate();
    return detail::assemble_fock(squeezed_coherent_amplitudes(init, osc.n_max), osc, bath, t, "squeezed_coherent_qnd");
}

inline ScenarioOutput kerr_qnd(const KerrInit& init, const OscillatorParams& osc, const OptionalBath& bath, double t) {
    osc.validate();
    const std::size_t pairs = detail::pair_count(osc.n_max);
    return detail::assemble_pairs(kerr_amplitudes(init, 2 * pairs - 1), osc, bath, t, "kerr_qnd");
}

inline ScenarioOutput squeezed_kerr_qnd(const SqueezedKerrInit& init, const OscillatorParams& osc,
                                        const OptionalBath& bath, double t) {
    osc.validate();
    const std::size_t pairs = detail::pair_count(osc.n_max);
    const SqueezedKerrAmplitudes s = squeezed_kerr_amplitudes(init, pairs);
    if (s.extension_change > kSqueezeExtensionTol) {
        fail(ErrorCode::TailTooHeavy, "squeezed_kerr_qnd: inner sums not converged at n_max (change " +
                                          std::to_string(s.extension_change) + "); raise n_max");
    }
    if (s.rounding_bound > kSqueezeExtensionTol) {
        fail(ErrorCode::NumericalInstability, "squeezed_kerr_qnd: cancellation in the squeeze series may reach " +
                                                  std::to_string(s.rounding_bound));
    }
    return detail::assemble_pairs(s.amp, osc, bath, t, "squeezed_kerr_qnd");
}

}  // namespace numphase
