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

#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "numphase/errors.hpp"
#include "numphase/specfun.hpp"

// Units: hbar = k_B = 1 throughout.

namespace numphase {

/// Ohmic squeezed-thermal bath, I(w) = (gamma0/pi) w exp(-w/omega_c), Phi(w) = a w.
struct QndBathConfig {
    double gamma0 = 0.0;
    double omega_c = 0.0;
    double temperature = 0.0;
    double squeeze_r = 0.0;
    double squeeze_a = 0.0;

    void validate() const {
        if (!(gamma0 > 0.0) || !std::isfinite(gamma0)) fail(ErrorCode::DomainError, "bath gamma0 must be positive");
        if (!(omega_c > 0.0) || !std::isfinite(omega_c)) fail(ErrorCode::DomainError, "bath omega_c must be positive");
        if (!(temperature >= 0.0)) fail(ErrorCode::DomainError, "bath temperature must be nonnegative");
        if (!(squeeze_r >= 0.0)) fail(ErrorCode::DomainError, "bath squeeze_r must be nonnegative");
        if (!(squeeze_a >= 0.0)) fail(ErrorCode::DomainError, "bath squeeze_a must be nonnegative");
    }
};

inline double eta(double t, const QndBathConfig& cfg) {
    if (!(t >= 0.0)) fail(ErrorCode::DomainError, "eta requires t >= 0");
    return -(cfg.gamma0 / std::numbers::pi) * std::atan(cfg.omega_c * t);
}

/// Decoherence exponent gamma(t). temperature == 0 selects the zero-temperature form;
/// any positive temperature uses the high-temperature form, which is only an
/// approximation at intermediate T.
inline double gamma_decoherence(double t, const QndBathConfig& cfg) {
    const double pi = std::numbers::pi;
    const double r = cfg.squeeze_r;
    const double a = cfg.squeeze_a;
    const double wc = cfg.omega_c;
    if (!(t >= 0.0)) fail(ErrorCode::DomainError, "gamma requires t >= 0");
    if (r > 0.0 && a > 0.0 && t <= 2.0 * a) {
        fail(ErrorCode::DomainError, "gamma with squeezing is defined only for t > 2a (t = " + std::to_string(t) +
                                         ", a = " + std::to_string(a) + ")");
    }
    const double ch = std::cosh(2.0 * r);
    const double sh = std::sinh(2.0 * r);
    const double u1 = 1.0 + wc * wc * (t - 2.0 * a) * (t - 2.0 * a);
    const double u2 = 1.0 + 4.0 * wc * wc * (t - a) * (t - a);
    const double u3 = 1.0 + 4.0 * a * a * wc * wc;

    if (cfg.temperature == 0.0) {
        return cfg.gamma0 / (2.0 * pi) * ch * std::log1p(wc * wc * t * t) -
               cfg.gamma0 / (4.0 * pi) * sh * std::log(u2 / (u1 * u1)) -
               cfg.gamma0 / (4.0 * pi) * sh * std::log(u3);
    }
    const double T = cfg.temperature;
    const double x = wc * t;
    const double thermal = 2.0 * x * std::atan(x) - std::log1p(x * x);
    const double squeeze = 4.0 * wc * (t - a) * std::atan(2.0 * wc * (t - a)) -
                           4.0 * wc * (t - 2.0 * a) * std::atan(wc * (t - 2.0 * a)) +
                           4.0 * a * wc * std::atan(2.0 * a * wc) + std::log(u1 * u1 / u2) - std::log(u3);
    return cfg.gamma0 * T / (pi * wc) * ch * thermal - cfg.gamma0 * T / (2.0 * pi * wc) * sh * squeeze;
}

/// Planck occupation 1/(e^{w/T} - 1); zero at T = 0.
inline double planck(double omega, double temperature) {
    if (!(temperature >= 0.0)) fail(ErrorCode::DomainError, "temperature must be nonnegative");
    if (temperature == 0.0) return 0.0;
    return 1.0 / std::expm1(omega / temperature);
}

/// N(t) = N_th (1 - e^{-gamma0 t}), the bath-induced occupation of an initially cold mode.
inline double thermal_occupation(double t, double omega, double temperature, double gamma0) {
    if (!(t >= 0.0)) fail(ErrorCode::DomainError, "thermal_occupation requires t >= 0");
    return -planck(omega, temperature) * std::expm1(-gamma0 * t);
}

/// Squeezed generalized amplitude damping parameters.
struct SgadParams {
    double n_th = 0.0;
    double big_n = 0.0;
    double chi_abs = 0.0;  // |M|
    double phi_sq = 0.0;
    double gamma_beta = 0.0;
    double gamma_minus = 0.0;
    Complex alpha_c;  // sqrt(gamma0^2 chi^2 - omega^2), imaginary when the bracket is negative
};

inline SgadParams sgad_params(double omega, double gamma0, double temperature, double r, double phi_sq) {
    if (!(omega > 0.0)) fail(ErrorCode::DomainError, "sgad omega must be positive");
    if (!(gamma0 > 0.0)) fail(ErrorCode::DomainError, "sgad gamma0 must be positive");
    SgadParams p;
    p.n_th = planck(omega, temperature);
    const double sh = std::sinh(r);
    const double ch = std::cosh(r);
    p.big_n = p.n_th * (ch * ch + sh * sh) + sh * sh;
    p.chi_abs = 0.5 * std::abs(std::sinh(2.0 * r)) * (2.0 * p.n_th + 1.0);
    p.phi_sq = phi_sq;
    p.gamma_beta = gamma0 * (2.0 * p.big_n + 1.0);
    p.gamma_minus = gamma0 * p.big_n;
    p.alpha_c = std::sqrt(Complex(gamma0 * gamma0 * p.chi_abs * p.chi_abs - omega * omega, 0.0));
    return p;
}

}  // namespace numphase
