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

#include <cmath>
#include <numbers>

#include <Eigen/Eigenvalues>
#include <gtest/gtest.h>

#include "numphase/dissipative_oscillator.hpp"
#include "numphase/infomeasure.hpp"
#include "numphase/qnd_oscillator.hpp"
#include "support/oracles.hpp"

namespace numphase {
namespace {

constexpr double kPi = std::numbers::pi;

Eigen::VectorXcd coherent_vector(Complex beta, int dim) {
    Eigen::VectorXcd v(dim);
    for (int n = 0; n < dim; ++n) {
        v(n) = std::exp(-0.5 * std::norm(beta) - 0.5 * std::lgamma(n + 1.0)) * std::pow(beta, n);
    }
    return v;
}

/// Zero-temperature damping of a two-component cat: |a><b| -> <b|a>^{1-e^{-g t}} |a e^{-g t/2}><b e^{-g t/2}|.
Eigen::MatrixXcd cat_zero_temperature_oracle(const CatInit& c, double gamma0, double t, int dim) {
    const Complex alpha = std::polar(c.alpha_abs, c.phi0);
    const double s = std::exp(-0.5 * gamma0 * t);
    const double overlap = std::exp(-2.0 * c.alpha_abs * c.alpha_abs * (-std::expm1(-gamma0 * t)));
    const Eigen::VectorXcd p = coherent_vector(alpha * s, dim);
    const Eigen::VectorXcd m = coherent_vector(-alpha * s, dim);
    const Complex e = std::polar(1.0, c.phi_rel);
    const double A = 0.5 / (1.0 + std::cos(c.phi_rel) * std::exp(-2.0 * c.alpha_abs * c.alpha_abs));
    return A * (p * p.adjoint() + m * m.adjoint() + overlap * (std::conj(e) * p * m.adjoint() + e * m * p.adjoint()));
}

double max_abs_diff(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) { return (a - b).cwiseAbs().maxCoeff(); }

double min_eigenvalue(const Eigen::MatrixXcd& rho) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho);
    return es.eigenvalues().minCoeff();
}

TEST(CatLindblad, ZeroTemperatureMatchesClosedForm) {
    for (const CatInit c : {CatInit{1.2, 0.3, 0.7}, CatInit{std::sqrt(2.0), 0.0, 0.0}, CatInit{2.0, -1.0, kPi}}) {
        for (double t : {0.0, 0.4, 3.0}) {
            const Eigen::MatrixXcd rho = cat_density_matrix(c, 1.0, 0.3, 0.0, t, 40);
            EXPECT_LT(max_abs_diff(rho, cat_zero_temperature_oracle(c, 0.3, t, 40)), 1e-12)
                << "alpha = " << c.alpha_abs << " t = " << t;
        }
    }
}

TEST(CatLindblad, ZeroTemperatureMatchesMasterEquation) {
    const CatInit c{1.5, 0.2, 0.5};
    const int dim = 30;
    const Eigen::MatrixXcd rho0 = cat_density_matrix(c, 1.0, 0.2, 0.0, 0.0, dim);
    const Eigen::MatrixXcd ref = oracle::lindblad_rk4(rho0, Eigen::MatrixXcd::Zero(dim, dim), 0.2, 0.0, 2.0, 800);
    EXPECT_LT(max_abs_diff(cat_density_matrix(c, 1.0, 0.2, 0.0, 2.0, dim), ref), 1e-9);
}

TEST(CatLindblad, HermitianAndPositive) {
    for (double T : {0.0, 2.0}) {
        for (double t : {0.0, 0.1, 1.0}) {
            const Eigen::MatrixXcd rho = cat_density_matrix({std::sqrt(2.0), 0.0, 0.9}, 1.0, 0.025, T, t, 48);
            EXPECT_LT(max_abs_diff(rho, rho.adjoint()), 1e-15);
            EXPECT_GT(min_eigenvalue(rho), -1e-10) << "T = " << T << " t = " << t;
        }
    }
}

TEST(CatLindblad, EvenCatHasEvenSupport) {
    const ScenarioOutput out = cat_lindblad({std::sqrt(2.0), 0.0, 0.0}, 1.0, 0.025, 0.0, 0.0, {48, 1e-10, 256});
    for (std::size_t n = 1; n < out.number.probs.size(); n += 2) EXPECT_NEAR(out.number.probs[n], 0.0, 1e-16) << n;
}

TEST(CatLindblad, UnitTraceAtZeroTemperature) {
    for (double t : {0.0, 0.5, 5.0}) {
        const ScenarioOutput out = cat_lindblad({2.0, 0.4, 1.3}, 1.0, 0.1, 0.0, t, {64, 1e-10, 512});
        EXPECT_NEAR(out.raw_trace + out.number.tail_mass, 1.0, 1e-12) << t;
        EXPECT_LT(out.normalization_residual, 1e-12);
    }
}

TEST(CatLindblad, RelaxesToVacuum) {
    const ScenarioOutput out = cat_lindblad({2.0, 0.0, 0.0}, 1.0, 1.0, 0.0, 20.0, {48, 1e-10, 256});
    EXPECT_NEAR(out.number.probs[0], 1.0, 1e-6);
    EXPECT_NEAR(std::abs(entropy_excess(out).excess_bits), 0.0, 1e-3);
}

TEST(CatLindblad, RejectsBadInput) {
    EXPECT_THROW(cat_density_matrix({1.0, 0.0, 0.0}, 1.0, 0.0, 0.0, 1.0, 8), Error);
    EXPECT_THROW(cat_density_matrix({1.0, 0.0, 0.0}, 1.0, 0.1, 0.0, -1.0, 8), Error);
    EXPECT_THROW(cat_density_matrix({0.0, 0.0, kPi}, 1.0, 0.1, 0.0, 1.0, 8), Error);
}

TEST(AnharmonicDissipative, ZeroTemperatureMatchesMasterEquation) {
    const int dim = 30;
    const AnharmonicDissInit init{1.4, 0.6, 0.05, 0.2, 1.0, 0.0};
    const Eigen::MatrixXcd rho0 = anharmonic_density_matrix(init, 0.0, dim);
    Eigen::MatrixXcd H = Eigen::MatrixXcd::Zero(dim, dim);
    for (int n = 0; n < dim; ++n) H(n, n) = init.kappa * n * (n - 1.0);
    const Eigen::MatrixXcd ref = oracle::lindblad_rk4(rho0, H, init.gamma0, 0.0, 1.5, 800);
    EXPECT_LT(max_abs_diff(anharmonic_density_matrix(init, 1.5, dim), ref), 1e-9);
}

TEST(AnharmonicDissipative, StartsPure) {
    const Eigen::MatrixXcd rho = anharmonic_density_matrix({std::sqrt(2.0), 0.0, 0.05, 0.01, 1.0, 0.0}, 0.0, 40);
    EXPECT_NEAR((rho * rho).trace().real(), 1.0, 1e-12);
}

TEST(AnharmonicDissipative, HermitianAndPositive) {
    for (double T : {0.0, 1.0}) {
        for (double t : {0.5, 5.0}) {
            const Eigen::MatrixXcd rho = anharmonic_density_matrix({std::sqrt(2.0), 0.3, 0.05, 0.01, 1.0, T}, t, 48);
            EXPECT_LT(max_abs_diff(rho, rho.adjoint()), 1e-15);
            EXPECT_GT(min_eigenvalue(rho), -1e-10) << "T = " << T << " t = " << t;
        }
    }
}

TEST(AnharmonicDissipative, UnitTraceAtZeroTemperature) {
    const ScenarioOutput out = anharmonic_dissipative({std::sqrt(2.0), 0.0, 0.05, 0.01, 1.0, 0.0}, 10.0, {64, 1e-10, 512});
    EXPECT_NEAR(out.raw_trace + out.number.tail_mass, 1.0, 1e-12);
}

TEST(AnharmonicDissipative, WeakDampingIsCoherent) {
    const ScenarioOutput a = anharmonic_dissipative({1.5, 0.4, 0.0, 1e-6, 1.0, 0.0}, 1.0, {48, 1e-10, 256});
    OscillatorParams o;
    o.n_max = 48;
    o.grid_points = 256;
    const ScenarioOutput c = coherent_qnd({1.5, 0.4}, o, std::nullopt, 0.0);
    double tv_p = 0.0, tv_phase = 0.0;
    for (std::size_t n = 0; n < c.number.probs.size(); ++n) tv_p += std::abs(a.number.probs[n] - c.number.probs[n]);
    for (std::size_t k = 0; k < c.phase.grid.size(); ++k) tv_phase += std::abs(a.phase.grid[k] - c.phase.grid[k]);
    EXPECT_LT(0.5 * tv_p, 1e-2);
    EXPECT_LT(0.5 * tv_phase * c.phase.grid.step(), 1e-2);
}

}  // namespace
}  // namespace numphase
