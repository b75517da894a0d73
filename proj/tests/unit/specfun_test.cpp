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
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "numphase/specfun.hpp"
#include "support/oracles.hpp"

namespace numphase {
namespace {

TEST(LogFactorial, SmallValuesAreExact) {
    EXPECT_EQ(log_factorial(0), 0.0);
    EXPECT_EQ(log_factorial(1), 0.0);
    EXPECT_DOUBLE_EQ(log_factorial(10), std::log(3628800.0));
    EXPECT_DOUBLE_EQ(log_factorial(20), std::log(2432902008176640000.0));
}

TEST(LogFactorial, LargeValuesMatchLgamma) {
    for (std::uint64_t n : {21ULL, 50ULL, 170ULL, 1000ULL}) {
        const double expect = std::lgamma(static_cast<double>(n) + 1.0);
        EXPECT_NEAR(log_factorial(n), expect, 1e-12 * expect) << n;
    }
}

TEST(LogFactorialTable, AgreesWithFunction) {
    const LogFactorialTable table(64);
    for (std::size_t n = 0; n <= 64; ++n) EXPECT_DOUBLE_EQ(table[n], log_factorial(n)) << n;
}

TEST(CompensatedSum, RecoversSmallTermsNextToLargeOnes) {
    CompensatedSum<double> s;
    for (double v : {1.0, 1e100, 1.0, -1e100}) s.add(v);
    EXPECT_EQ(s.value(), 2.0);
    CompensatedSum<Complex> c;
    for (Complex v : {Complex(1.0, 1.0), Complex(1e100, -1e100), Complex(1.0, 1.0), Complex(-1e100, 1e100)}) c.add(v);
    EXPECT_EQ(c.value(), Complex(2.0, 2.0));
}

TEST(Hermite, LowOrders) {
    EXPECT_EQ(hermite(0, Complex(3.7, -1.2)), Complex(1.0));
    EXPECT_EQ(hermite(1, Complex(2.0)), Complex(4.0));
    EXPECT_EQ(hermite(3, Complex(1.0)), Complex(-4.0));
}

TEST(Hermite, OrderLimit) {
    auto code_of = [](unsigned n, unsigned max_order) {
        try {
            hermite(n, Complex(0.5), max_order);
        } catch (const Error& e) {
            return e.code();
        }
        return ErrorCode::ConfigError;  // sentinel: no throw
    };
    EXPECT_EQ(code_of(513, kDefaultHermiteMaxOrder), ErrorCode::OrderTooLarge);
    // Order 512 passes the order check; the value itself exceeds double range.
    EXPECT_EQ(code_of(512, kDefaultHermiteMaxOrder), ErrorCode::Overflow);
    EXPECT_EQ(code_of(150, kDefaultHermiteMaxOrder), ErrorCode::ConfigError);
    EXPECT_EQ(code_of(150, 100), ErrorCode::OrderTooLarge);
}

TEST(Hermite, OverflowIsReported) {
    try {
        hermite(300, Complex(1e3));
        FAIL() << "expected Overflow";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::Overflow);
    }
}

TEST(Hermite, RecurrenceIdentityOnRandomArguments) {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> radius(0.0, 5.0), angle(0.0, kTwoPi);
    std::uniform_int_distribution<unsigned> order(1, 49);
    for (int i = 0; i < 500; ++i) {
        const Complex z = std::polar(radius(rng), angle(rng));
        const unsigned n = order(rng);
        const Complex lhs = hermite(n + 1, z);
        const Complex rhs = 2.0 * z * hermite(n, z) - 2.0 * static_cast<double>(n) * hermite(n - 1, z);
        const double scale = std::max({std::abs(lhs), std::abs(2.0 * z * hermite(n, z)),
                                       std::abs(2.0 * static_cast<double>(n) * hermite(n - 1, z))});
        EXPECT_LE(std::abs(lhs - rhs), 1e-10 * scale) << "n = " << n << ", z = " << z;
    }
}

TEST(Hermite, MatchesExactRationalExpansion) {
    int cases = 0;
    for (unsigned n = 0; n <= 30; n += 3) {
        for (int a = -8; a <= 8; a += 2) {
            for (int b = -8; b <= 8; b += 2) {
                const oracle::GaussRational z{oracle::Rational(a, 4), oracle::Rational(b, 4)};
                const oracle::GaussRational h = oracle::hermite_exact(n, z);
                const Complex expect(oracle::to_double(h.re), oracle::to_double(h.im));
                const Complex got = hermite(n, Complex(a / 4.0, b / 4.0));
                EXPECT_LE(std::abs(got - expect), 1e-12 * std::abs(expect)) << n << " " << a << " " << b;
                ++cases;
            }
        }
    }
    EXPECT_GE(cases, 500);
}

TEST(ScaledHermite, MatchesNormalizedPolynomials) {
    const Complex z(0.7, -0.4);
    const Complex w(0.8, 0.0);
    const std::vector<Complex> u = scaled_hermite_sequence(40, z, w);
    for (unsigned n = 0; n <= 40; ++n) {
        const Complex expect =
            hermite(n, z) * std::pow(w, static_cast<double>(n)) /
            std::exp(0.5 * (n * std::log(2.0) + log_factorial(n)));
        EXPECT_LE(std::abs(u[n] - expect), 1e-12 * std::max(1.0, std::abs(expect))) << n;
    }
}

TEST(ScaledHermite, StaysFiniteWhereBarePolynomialsOverflow) {
    const std::vector<Complex> u = scaled_hermite_sequence(2000, Complex(3.0, 1.0), Complex(0.9));
    for (const Complex& v : u) EXPECT_TRUE(std::isfinite(std::abs(v)));
}

TEST(Hyp2f1, WorkedValues) {
    EXPECT_EQ(hyp2f1_terminating(0, 7, 0.5, 3.0), 1.0);
    EXPECT_DOUBLE_EQ(hyp2f1_terminating(1, 1, 1.0, 0.5), 1.5);
    EXPECT_DOUBLE_EQ(hyp2f1_terminating(2, 2, 1.0, 2.0), 13.0);
}

TEST(Hyp2f1, PoleBeforeTermination) {
    try {
        hyp2f1_terminating(3, 3, -1.0, 0.5);
        FAIL() << "expected PoleInSeries";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::PoleInSeries);
    }
    // The series ends before (c)_k reaches zero.
    EXPECT_NO_THROW(hyp2f1_terminating(2, 5, -2.0, 0.5));
}

TEST(Hyp2f1, MatchesExactRationalSeries) {
    std::vector<oracle::Rational> cs = {oracle::Rational(1, 2), oracle::Rational(3, 2)};
    for (int l = 0; l <= 8; ++l) cs.emplace_back(l + 1);
    int cases = 0;
    for (unsigned p = 0; p <= 8; ++p) {
        for (unsigned m = 0; m <= 8; ++m) {
            for (const oracle::Rational& c : cs) {
                for (int xi = -8; xi <= 8; ++xi) {
                    const oracle::Rational x(xi, 2);
                    const double expect = oracle::to_double(oracle::hyp2f1_exact(p, m, c, x));
                    const double got = hyp2f1_terminating(p, m, oracle::to_double(c), xi / 2.0);
                    if (expect == 0.0) {
                        // No relative scale exists at an exact root; compare against the largest term.
                        const double scale = static_cast<double>(
                            hyp2f1_terminating_series(p, m, oracle::to_double(c), xi / 2.0).max_abs_term);
                        EXPECT_LE(std::abs(got), 1e-15 * scale) << p << " " << m << " " << c << " " << x;
                    } else {
                        EXPECT_LE(std::abs(got - expect), 1e-12 * std::abs(expect)) << p << " " << m << " " << c << " " << x;
                    }
                    ++cases;
                }
            }
        }
    }
    EXPECT_GE(cases, 500);
}

TEST(Hyp2f1, ComplexOverloadAgreesOnRealAxis) {
    for (unsigned p = 0; p <= 6; ++p) {
        for (unsigned m = 0; m <= 6; ++m) {
            const double r = hyp2f1_terminating(p, m, 1.5, -0.7);
            const Complex c = hyp2f1_terminating(p, m, 1.5, Complex(-0.7, 0.0));
            EXPECT_NEAR(c.real(), r, 1e-14 * std::max(1.0, std::abs(r)));
            EXPECT_EQ(c.imag(), 0.0);
        }
    }
}

TEST(Hyp2f1Weighted, DirectBranchMatchesExact) {
    const double w = 0.375;
    const double x = 2.5;
    for (unsigned p = 0; p <= 10; ++p) {
        for (unsigned m = 0; m <= 10; ++m) {
            const double expect = oracle::to_double(
                oracle::hyp2f1_weighted_exact(p, m, oracle::Rational(2), oracle::exact(x), oracle::exact(w)));
            const Complex got = hyp2f1_terminating_weighted(p, m, 2.0, Complex(x), Complex(w));
            EXPECT_LE(std::abs(got - expect), 1e-12 * std::max(std::abs(expect), 1e-300)) << p << " " << m;
        }
    }
}

TEST(Hyp2f1Weighted, LogBranchKeepsBoundedProducts) {
    // w^{p+m} alone underflows for p = m = 120 while the weighted sum stays O(1).
    const double w = std::ldexp(1.0, -6);
    const double x = std::ldexp(1.0, 12);
    for (unsigned p : {100U, 120U}) {
        const unsigned m = p;
        const double expect = oracle::to_double(
            oracle::hyp2f1_weighted_exact(p, m, oracle::Rational(5), oracle::exact(x), oracle::exact(w)));
        const Complex got = hyp2f1_terminating_weighted(p, m, 5.0, Complex(x), Complex(w));
        ASSERT_TRUE(std::isfinite(expect));
        EXPECT_LE(std::abs(got - expect), 1e-10 * std::abs(expect)) << p;
    }
}

TEST(Hyp2f1Weighted, RejectsNonPositiveC) {
    EXPECT_THROW(hyp2f1_terminating_weighted(2, 2, 0.0, Complex(1.0), Complex(0.5)), Error);
}

TEST(PeriodicGrid, Validation) {
    EXPECT_THROW(PeriodicGrid(std::vector<double>(15, 1.0)), Error);
    std::vector<double> v(16, 1.0);
    v[3] = std::nan("");
    EXPECT_THROW(PeriodicGrid{v}, Error);
    EXPECT_NO_THROW(PeriodicGrid(std::vector<double>(16, 1.0)));
}

TEST(Trapezoid, WorkedValues) {
    for (std::size_t n : {16UL, 100UL, 2048UL}) {
        EXPECT_NEAR(trapezoid_periodic(PeriodicGrid::sample(n, [](double) { return 1.0 / kTwoPi; })), 1.0, 1e-14);
        EXPECT_NEAR(trapezoid_periodic(PeriodicGrid::sample(n, [](double t) { return std::cos(t); })), 0.0, 1e-14);
        EXPECT_NEAR(trapezoid_periodic(PeriodicGrid::sample(n, [](double t) { return (1.0 + std::cos(t)) / kTwoPi; })),
                    1.0, 1e-14);
    }
}

TEST(Trapezoid, ExactForHarmonicsBelowNyquist) {
    const std::size_t n = 128;
    for (int k = 1; k < static_cast<int>(n / 2); ++k) {
        const double c = trapezoid_periodic(PeriodicGrid::sample(n, [k](double t) { return std::cos(k * t); }));
        const double s = trapezoid_periodic(PeriodicGrid::sample(n, [k](double t) { return std::sin(k * t); }));
        EXPECT_LT(std::abs(c), 1e-13) << k;
        EXPECT_LT(std::abs(s), 1e-13) << k;
    }
}

TEST(AliasGuard, GridMustExceedFourNmaxPlusOne) {
    EXPECT_NO_THROW(require_alias_free(2048, 511));
    EXPECT_THROW(require_alias_free(2048, 512), Error);
    EXPECT_THROW(require_alias_free(21, 5), Error);
}

}  // namespace
}  // namespace numphase
