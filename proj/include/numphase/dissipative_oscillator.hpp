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

#include <cmath>
#include <complex>
#include <limits>
#include <string>
#include <vector>

#include "numphase/bathkernel.hpp"
#include "numphase/distributions.hpp"
#include "numphase/errors.hpp"
#include "numphase/specfun.hpp"

// Closed-form reduced dynamics of an oscillator damped by a thermal reservoir.
// Matrix elements are evaluated independently for every (n, m); no master
// equation is integrated.

namespace numphase {

/// A^{1/2}(|alpha> + e^{i phi_rel}|-alpha>), alpha = alpha_abs e^{i phi0}.
struct CatInit {
    double alpha_abs = 0.0;
    double phi0 = 0.0;
    double phi_rel = 0.0;
};

/// Coherent seed |xi>, xi = xi_abs e^{i phi0}, evolving under omega a^+a + kappa a^{+2}a^2 with damping.
struct AnharmonicDissInit {
    double xi_abs = 0.0;
    double phi0 = 0.0;
    double kappa = 0.0;
    double gamma0 = 0.0;
    double omega = 1.0;
    double temperature = 0.0;
};

struct Truncation {
    std::size_t n_max = 48;
    double epsilon_tail = 1e-10;
    std::size_t grid_points = kDefaultGridPoints;

    void validate() const {
        if (n_max < 1) fail(ErrorCode::DomainError, "n_max must be at least 1");
        if (!(epsilon_tail > 0.0 && epsilon_tail <= 1e-6)) {
            fail(ErrorCode::DomainError, "epsilon_tail must lie in (0, 1e-6]");
        }
        require_alias_free(grid_points, n_max);
    }
};

/// Diagonal entries beyond n_max that are summed to estimate the truncated probability.
inline constexpr std::size_t kTailBand = 16;

namespace detail {

inline constexpr double kSeriesStopRatio = 1e-16;
inline constexpr int kSeriesStopRun = 5;
inline constexpr std::size_t kSeriesMaxTerms = 100000;

/// Sums term(l) for l = 0, 1, ... until |scale(l)| <= 1e-16 * sum of |scale| for
/// five consecutive l. `term` returns {value, scale}; scale is the parity-free
/// magnitude used for the stopping rule so that structurally zero terms never
/// stop the sum early.
template <class F>
Complex sum_l_series(F&& term) {
    CompensatedSum<Complex> sum;
    double scale_sum = 0.0;
    int quiet = 0;
    for (std::size_t l = 0; l < kSeriesMaxTerms; ++l) {
        const auto [value, scale] = term(static_cast<unsigned>(l));
        sum.add(value);
        scale_sum += scale;
        quiet = (scale <= kSeriesStopRatio * scale_sum) ? quiet + 1 : 0;
        if (quiet >= kSeriesStopRun) return sum.value();
    }
    fail(ErrorCode::TailTooHeavy, "l-series did not converge within " + std::to_string(kSeriesMaxTerms) + " terms");
}

inline void check_time(double t) {
    if (!(t >= 0.0) || !std::isfinite(t)) fail(ErrorCode::DomainError, "evolution time must be finite and nonnegative");
}

/// Builds p(m) and P(theta) from an (n_max + 1 + band)-square density matrix.
inline ScenarioOutput finish_dissipative(const Eigen::MatrixXcd& full, const Truncation& tr) {
    const Eigen::Index keep = static_cast<Eigen::Index>(tr.n_max + 1);
    std::vector<double> probs(keep);
    for (Eigen::Index m = 0; m < keep; ++m) probs[m] = full(m, m).real();
    double tail = 0.0;
    for (Eigen::Index m = keep; m < full.rows(); ++m) tail += std::max(0.0, full(m, m).real());
    if (tail > tr.epsilon_tail) {
        fail(ErrorCode::TailTooHeavy, "probability beyond n_max is " + std::to_string(tail) + "; raise n_max");
    }
    const PhaseAssembly ph = assemble_phase(full.topLeftCorner(keep, keep), tr.grid_points, 1);
    if (ph.imag_residual > 1e-8) {
        fail(ErrorCode::BranchInstability,
             "assembled phase distribution has imaginary part " + std::to_string(ph.imag_residual));
    }
    return finalize_output(std::move(probs), tail, ph.values, ph.imag_residual);
}

}  // namespace detail

inline double cat_normalization(const CatInit& init) {
    const double d = 1.0 + std::cos(init.phi_rel) * std::exp(-2.0 * init.alpha_abs * init.alpha_abs);
    if (!(d > 1e-300)) fail(ErrorCode::DomainError, "cat state with these parameters has zero norm");
    return 0.5 / d;
}

/// Density matrix rho_{n,m}(t), n, m = 0..dim-1, of a cat state in a thermal reservoir.
inline Eigen::MatrixXcd cat_density_matrix(const CatInit& init, double omega, double gamma0, double temperature, double t,
                                           std::size_t dim) {
    if (!(init.alpha_abs >= 0.0) || !std::isfinite(init.alpha_abs)) {
        fail(ErrorCode::DomainError, "alpha_abs must be finite and nonnegative");
    }
    if (!std::isfinite(init.phi0) || !std::isfinite(init.phi_rel)) fail(ErrorCode::DomainError, "cat phases must be finite");
    if (!(gamma0 > 0.0)) fail(ErrorCode::DomainError, "gamma0 must be positive");
    detail::check_time(t);
    const double A = cat_normalization(init);
    const double N = thermal_occupation(t, omega, temperature, gamma0);
    const double w = std::exp(-0.5 * gamma0 * t) / (N + 1.0);
    const double sh = std::sinh(0.5 * gamma0 * t);
    const double X = 4.0 * N * (N + 1.0) * sh * sh;
    // b = 1 - e^{-gamma0 t}/(N+1); written via expm1 to keep precision at small t.
    const double b = (N - std::expm1(-gamma0 * t)) / (N + 1.0);
    const double a2 = init.alpha_abs * init.alpha_abs;
    const Complex eiphi = std::polar(1.0, init.phi_rel);

    std::vector<double> logq(dim);
    const bool vacuum = init.alpha_abs == 0.0;
    for (std::size_t n = 0; n < dim; ++n) {
        logq[n] = vacuum ? (n == 0 ? 0.0 : -std::numeric_limits<double>::infinity())
                         : static_cast<double>(n) * std::log(init.alpha_abs) - 0.5 * log_factorial(n) - 0.5 * a2;
    }

    Eigen::MatrixXcd rho(dim, dim);
    for (std::size_t n = 0; n < dim; ++n) {
        for (std::size_t m = n; m < dim; ++m) {
            const double qq = std::exp(logq[n] + logq[m]);
            Complex value(0.0);
            if (qq != 0.0) {
                const double sn = (n % 2 == 0) ? 1.0 : -1.0;
                const double sm = (m % 2 == 0) ? 1.0 : -1.0;
                const Complex inter = sn * eiphi + sm * std::conj(eiphi);
                const double ba2 = b * a2;
                double lw = 0.0;  // log of (b |alpha|^2)^l / l!
                const Complex series = detail::sum_l_series([&](unsigned l) {
                    if (l > 0) lw += (ba2 > 0.0 ? std::log(ba2) : -std::numeric_limits<double>::infinity()) - std::log(l);
                    const double weight = std::exp(lw);
                    if (weight == 0.0) return std::pair<Complex, double>{Complex(0.0), 0.0};
                    const Complex f = hyp2f1_terminating_weighted(static_cast<unsigned>(m), static_cast<unsigned>(n),
                                                                  static_cast<double>(l) + 1.0, Complex(X), Complex(w));
                    const double sl = (l % 2 == 0) ? 1.0 : -1.0;
                    const Complex parity = 1.0 + sn * sm + sl * inter;
                    return std::pair<Complex, double>{weight * f * parity, weight * std::abs(f)};
                });
                value = A / (N + 1.0) * qq * std::polar(1.0, std::remainder((static_cast<double>(n) - m) * init.phi0, kTwoPi)) *
                        series;
            }
            rho(n, m) = value;
            rho(m, n) = std::conj(value);
        }
    }
    return rho;
}

inline ScenarioOutput cat_lindblad(const CatInit& init, double omega, double gamma0, double temperature, double t,
                                   const Truncation& tr) {
    tr.validate();
    const Eigen::MatrixXcd rho = cat_density_matrix(init, omega, gamma0, temperature, t, tr.n_max + 1 + kTailBand);
    return detail::finish_dissipative(rho, tr);
}

namespace detail {

/// e^z - 1 without cancellation for small |z|.
inline Complex expm1_complex(Complex z) {
    const double a = z.real();
    const double b = z.imag();
    const double sb2 = std::sin(0.5 * b);
    return {std::expm1(a) * std::cos(b) - 2.0 * sb2 * sb2, std::exp(a) * std::sin(b)};
}

/// Per-coherence-order quantities of the damped anharmonic oscillator.
struct AnharmonicSector {
    Complex damping;  // E_d(t)
    Complex gain;     // (N+1)/N g_d(t), finite as N -> 0
    Complex argument; // 4N(N+1) sinh^2(x) / Delta^2
    Complex phase;    // exp[(-2 i kappa d + gamma0/2) t]
};

inline AnharmonicSector anharmonic_sector(int d, const AnharmonicDissInit& init, double N, double t) {
    const Complex omega_d(1.0 + 2.0 * N, -2.0 * init.kappa / init.gamma0 * d);
    const Complex delta = std::sqrt(omega_d * omega_d - 4.0 * N * (N + 1.0));
    const Complex x = 0.5 * init.gamma0 * delta * t;
    const Complex e2 = std::exp(-2.0 * x);
    const Complex one_minus = -expm1_complex(-2.0 * x);
    const Complex den_e = (omega_d + delta) + (delta - omega_d) * e2;
    const Complex den_g = omega_d * one_minus + delta * (1.0 + e2);
    if (std::abs(den_e) < 1e-300 || std::abs(den_g) < 1e-300 || !std::isfinite(std::abs(den_e)) ||
        !std::isfinite(std::abs(den_g))) {
        fail(ErrorCode::BranchInstability, "damping denominator underflows at coherence order " + std::to_string(d));
    }
    AnharmonicSector s;
    s.damping = 2.0 * delta * std::exp(-x) / den_e;
    s.gain = 2.0 * (N + 1.0) * one_minus / den_g;
    const Complex shx = 0.5 * (1.0 - e2) * std::exp(x);
    s.argument = 4.0 * N * (N + 1.0) * (shx * shx) / (delta * delta);
    s.phase = std::exp(Complex(0.5 * init.gamma0 * t, -2.0 * init.kappa * d * t));
    if (!std::isfinite(std::abs(s.damping)) || !std::isfinite(std::abs(s.gain))) {
        fail(ErrorCode::BranchInstability, "damping factors are not finite at coherence order " + std::to_string(d));
    }
    return s;
}

}  // namespace detail

/// rho_{mn}(t), m, n = 0..dim-1, of the damped anharmonic oscillator started in |xi>.
inline Eigen::MatrixXcd anharmonic_density_matrix(const AnharmonicDissInit& init, double t, std::size_t dim) {
    if (!(init.xi_abs >= 0.0) || !std::isfinite(init.xi_abs)) fail(ErrorCode::DomainError, "xi_abs must be finite and nonnegative");
    if (!std::isfinite(init.phi0) || !std::isfinite(init.kappa)) fail(ErrorCode::DomainError, "phi0 and kappa must be finite");
    if (!(init.gamma0 > 0.0) || !std::isfinite(init.gamma0)) fail(ErrorCode::DomainError, "gamma0 must be positive");
    if (!(init.omega > 0.0)) fail(ErrorCode::DomainError, "omega must be positive");
    detail::check_time(t);
    const double N = planck(init.omega, init.temperature);
    const double x2 = init.xi_abs * init.xi_abs;

    std::vector<Complex> c(dim, Complex(0.0));
    if (init.xi_abs == 0.0) {
        c[0] = 1.0;
    } else {
        for (std::size_t n = 0; n < dim; ++n) {
            const double nn = static_cast<double>(n);
            c[n] = std::polar(std::exp(nn * std::log(init.xi_abs) - 0.5 * log_factorial(n) - 0.5 * x2),
                              std::remainder(nn * init.phi0, kTwoPi));
        }
    }

    Eigen::MatrixXcd rho(dim, dim);
    if (t == 0.0) {
        Eigen::Map<const Eigen::VectorXcd> v(c.data(), static_cast<Eigen::Index>(dim));
        rho = v * v.adjoint();
        return rho;
    }
    std::vector<detail::AnharmonicSector> sectors(dim);
    for (std::size_t d = 0; d < dim; ++d) sectors[d] = detail::anharmonic_sector(static_cast<int>(d), init, N, t);

    for (std::size_t m = 0; m < dim; ++m) {
        for (std::size_t n = m; n < dim; ++n) {
            const detail::AnharmonicSector& s = sectors[n - m];
            const Complex cc = c[m] * std::conj(c[n]);
            Complex value(0.0);
            if (cc != Complex(0.0)) {
                const Complex gx = s.gain * x2;
                Complex weight(1.0);  // (gain |xi|^2)^l / l!
                const Complex series = detail::sum_l_series([&](unsigned l) {
                    if (l > 0) weight *= gx / static_cast<double>(l);
                    const Complex f = hyp2f1_terminating_weighted(static_cast<unsigned>(n), static_cast<unsigned>(m),
                                                                  static_cast<double>(l) + 1.0, s.argument, s.damping);
                    return std::pair<Complex, double>{weight * f, std::abs(weight * f)};
                });
                value = cc * s.phase * s.damping * series;
            }
            rho(m, n) = value;
            rho(n, m) = std::conj(value);
        }
    }
    return rho;
}

inline ScenarioOutput anharmonic_dissipative(const AnharmonicDissInit& init, double t, const Truncation& tr) {
    tr.validate();
    const Eigen::MatrixXcd rho = anharmonic_density_matrix(init, t, tr.n_max + 1 + kTailBand);
    return detail::finish_dissipative(rho, tr);
}

}  // namespace numphase
