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

#include <algorithm>
#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "numphase/atomic_qubit.hpp"
#include "numphase/infomeasure.hpp"
#include "support/oracles.hpp"

namespace numphase {
namespace {

constexpr double kPi = std::numbers::pi;

/// Spin-1/2 phase distribution as the polar integral of the Husimi function
/// (1 + n.n')/2 with weight (2j+1)/(4 pi), by a fine midpoint rule.
double husimi_phase_oracle(double alpha_p, double beta_p, double phi) {
    const int n = 20000;
    long double s = 0.0L;
    const double h = kPi / n;
    for (int i = 0; i < n; ++i) {
        const double th = (i + 0.5) * h;
        const double dot = std::cos(th) * std::cos(alpha_p) + std::sin(th) * std::sin(alpha_p) * std::cos(phi - beta_p);
        s += std::sin(th) * 0.5 * (1.0 + dot) * h;
    }
    return static_cast<double>(2.0L / (4.0L * kPi) * s);
}

const QndBathConfig kFig6Bath{0.025, 100.0, 10.0, 0.5, 0.0};

TEST(Dicke, Distribution) {
    EXPECT_EQ(dicke_number_distribution(1, 0.0)[0], 1.0);
    EXPECT_NEAR(dicke_number_distribution(1, kPi)[1], 1.0, 1e-15);
    const std::vector<double> p = dicke_number_distribution(4, 1.1);
    double s = 0.0;
    for (double v : p) s += v;
    EXPECT_NEAR(s, 1.0, 1e-14);
    EXPECT_NEAR(p[2], 6.0 * std::pow(std::sin(0.55), 4) * std::pow(std::cos(0.55), 4), 1e-15);
}

TEST(QubitNoiseless, PoleAndEquator) {
    const ComplementarityReport pole = entropy_excess(qubit_noiseless({0.0, 0.0}, 256));
    EXPECT_NEAR(pole.number_entropy_bits, 0.0, 1e-15);
    EXPECT_NEAR(pole.phase_knowledge_bits, 0.0, 1e-15);
    const ComplementarityReport eq = entropy_excess(qubit_noiseless({kPi / 2, 1.0}, 4096));
    EXPECT_NEAR(eq.number_entropy_bits, 1.0, 1e-15);
    const double ref = oracle::periodic_quadrature(
        [](double phi) {
            const double P = (1.0 + 0.25 * kPi * std::cos(phi)) / (2 * kPi);
            return P * std::log2(2 * kPi * P);
        },
        1 << 16);
    EXPECT_NEAR(eq.phase_knowledge_bits, ref, 1e-12);
}

TEST(QubitNoiseless, MatchesHusimiOracle) {
    for (const auto [a, b] : {std::pair{0.4, 0.0}, std::pair{kPi / 2, 2.0}, std::pair{2.7, 5.5}}) {
        const ScenarioOutput out = qubit_noiseless({a, b}, 64);
        for (std::size_t k = 0; k < 64; k += 7) {
            EXPECT_NEAR(out.phase.grid[k], husimi_phase_oracle(a, b, out.phase.grid.theta(k)), 1e-8);
        }
    }
}

TEST(QubitPhaseDamping, NumberEntropyUnchanged) {
    for (double a : {0.3, 1.0, 2.0}) {
        const double h0 = entropy_excess(qubit_noiseless({a, 0.0})).number_entropy_bits;
        const ComplementarityReport r = entropy_excess(qubit_phase_damping({a, 0.0}, 1.0, kFig6Bath, 1.0));
        EXPECT_EQ(r.number_entropy_bits, h0);
        EXPECT_LT(r.phase_knowledge_bits, entropy_excess(qubit_noiseless({a, 0.0})).phase_knowledge_bits);
    }
}

TEST(QubitPhaseDamping, AzimuthIndependent) {
    for (double a : {0.5, kPi / 2}) {
        const ComplementarityReport r0 = entropy_excess(qubit_phase_damping({a, 0.0}, 1.0, kFig6Bath, 1.0, 1024));
        const ComplementarityReport r1 = entropy_excess(qubit_phase_damping({a, 1.3}, 1.0, kFig6Bath, 1.0, 1024));
        EXPECT_NEAR(r0.phase_knowledge_bits, r1.phase_knowledge_bits, 1e-10);
        EXPECT_NEAR(r0.number_entropy_bits, r1.number_entropy_bits, 1e-15);
    }
}

SgadParams fig7_params(double r) { return sgad_params(1.0, 0.025, 10.0, r, kPi / 8); }

TEST(QubitSgad, InitialTimeIsNoiseless) {
    const ScenarioOutput a = qubit_sgad({1.1, 0.4}, 1.0, fig7_params(1.0), 0.025, 0.0, 256);
    const ScenarioOutput b = qubit_noiseless({1.1, 0.4}, 256);
    for (std::size_t k = 0; k < 256; ++k) EXPECT_NEAR(a.phase.grid[k], b.phase.grid[k], 1e-15);
    EXPECT_NEAR(a.number.probs[1], b.number.probs[1], 1e-15);
}

TEST(QubitSgad, RelaxesToSteadyState) {
    const SgadParams p = fig7_params(1.0);
    const ScenarioOutput out = qubit_sgad({0.7, 0.0}, 1.0, p, 0.025, 4000.0, 256);
    EXPECT_NEAR(out.number.probs[1], p.big_n / (2 * p.big_n + 1), 1e-12);
    for (std::size_t k = 0; k < 256; ++k) EXPECT_NEAR(out.phase.grid[k], 1.0 / (2 * kPi), 1e-12);
}

TEST(QubitSgad, UnsqueezedIsDampedRotation) {
    const SgadParams p = fig7_params(0.0);
    const double t = 1.0, a = 1.2, b = 0.5;
    const ScenarioOutput out = qubit_sgad({a, b}, 1.0, p, 0.025, t, 128);
    EXPECT_LT(out.imag_residual, 1e-12);
    for (std::size_t k = 0; k < 128; ++k) {
        const double phi = out.phase.grid.theta(k);
        const double ref =
            (1.0 + 0.25 * kPi * std::sin(a) * std::exp(-0.5 * p.gamma_beta * t) * std::cos(phi - b - t)) / (2 * kPi);
        EXPECT_NEAR(out.phase.grid[k], ref, 1e-14);
    }
}

TEST(QubitSgad, SqueezingBreaksAzimuthSymmetry) {
    const double r0 = entropy_excess(qubit_sgad({kPi / 2, 0.0}, 1.0, fig7_params(1.0), 0.025, 1.0)).phase_knowledge_bits;
    const double r1 = entropy_excess(qubit_sgad({kPi / 2, 1.3}, 1.0, fig7_params(1.0), 0.025, 1.0)).phase_knowledge_bits;
    EXPECT_GT(std::abs(r0 - r1), 1e-6);
}

TEST(QubitMu, SearchAndContrast) {
    const MuSearchResult res = mu_search_qubit(1e-8);
    EXPECT_NEAR(res.mu, 4.085, 0.02);
    EXPECT_NEAR(res.argmin, kPi / 2, 1e-3);
    const double rmax = qubit_max_phase_knowledge();
    EXPECT_NEAR(rmax, entropy_excess(qubit_noiseless({kPi / 2, 0.0})).phase_knowledge_bits, 1e-12);
}

TEST(QuasiMub, NoiselessExtremaCoincide) {
    const QuasiMubTable t = quasi_mub_scan(NoiselessChannel{}, 129, qubit_mu());
    EXPECT_TRUE(t.coincide);
    double xmu_min = 1e9;
    for (const QuasiMubRow& r : t.rows) {
        xmu_min = std::min(xmu_min, r.xmu_bits);
        const double mirror = std::abs(r.alpha_p - kPi / 2);
        EXPECT_EQ(r.max_phase_knowledge, mirror < 1e-9);
    }
    EXPECT_GE(xmu_min, -1e-3);
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        EXPECT_NEAR(t.rows[i].x_bits, t.rows[t.rows.size() - 1 - i].x_bits, 1e-10);
    }
}

TEST(QuasiMub, DampedChannelsStayAboveBound) {
    const double mu = qubit_mu();
    for (const QubitChannel& ch : {QubitChannel{PhaseDampingChannel{1.0, kFig6Bath, 1.0}},
                                   QubitChannel{SgadChannel{1.0, 0.025, 10.0, 1.0, kPi / 8, 1.0}}}) {
        const QuasiMubTable t = quasi_mub_scan(ch, 129, mu);
        for (const QuasiMubRow& r : t.rows) EXPECT_GE(r.xmu_bits, -1e-3) << r.alpha_p;
    }
}

TEST(SwappedExcess, DiffersFromExcess) {
    const ScenarioOutput out = qubit_noiseless({kPi / 4, 0.0}, 1024);
    const double x = entropy_excess(out).excess_bits;
    const double swapped = swapped_excess(out);
    EXPECT_GT(std::abs(swapped - x), 1e-3);
    EXPECT_GE(swapped, 0.0);
}

TEST(AtomicCoherentState, Validation) {
    EXPECT_THROW(qubit_noiseless({-0.1, 0.0}), Error);
    EXPECT_THROW(qubit_noiseless({0.5, 2 * kPi}), Error);
    EXPECT_THROW(qubit_noiseless({0.5, 0.0, 1.0}), Error);
    EXPECT_THROW(qubit_phase_damping({0.5, 0.0}, 1.0, std::nullopt, -1.0), Error);
}

}  // namespace
}  // namespace numphase
