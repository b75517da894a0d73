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

// Acceptance driver: one PASS/FAIL line per criterion, sub-check details indented below.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "numphase/runner/verify.hpp"
#include "numphase/specfun.hpp"
#include "support/oracles.hpp"

#ifndef NUMPHASE_FIGURES_DIR
#define NUMPHASE_FIGURES_DIR "figures"
#endif

namespace {

using numphase::runner::VerifyReport;
namespace oracle = numphase::oracle;

// Criterion 6: hermite and hyp2f1 against exact rational brute force, relative 1e-12.
VerifyReport oracle_checks() {
    VerifyReport rep;
    {
        int cases = 0;
        double worst = 0.0;
        for (unsigned n = 0; n <= 30; n += 3) {
            for (int a = -8; a <= 8; a += 2) {
                for (int b = -8; b <= 8; b += 2) {
                    const oracle::GaussRational h =
                        oracle::hermite_exact(n, {oracle::Rational(a, 4), oracle::Rational(b, 4)});
                    const numphase::Complex expect(oracle::to_double(h.re), oracle::to_double(h.im));
                    const numphase::Complex got = numphase::hermite(n, numphase::Complex(a / 4.0, b / 4.0));
                    worst = std::max(worst, std::abs(got - expect) / std::abs(expect));
                    ++cases;
                }
            }
        }
        rep.add(6, "oracle.hermite", cases >= 500 && worst <= 1e-12,
                std::to_string(cases) + " cases, max relative error " + numphase::runner::detail::fmt(worst));
    }
    {
        std::vector<oracle::Rational> cs = {oracle::Rational(1, 2), oracle::Rational(3, 2)};
        for (int l = 0; l <= 8; ++l) cs.emplace_back(l + 1);
        int cases = 0;
        int roots = 0;
        double worst = 0.0;
        double root_worst = 0.0;
        for (unsigned p = 0; p <= 8; ++p) {
            for (unsigned m = 0; m <= 8; ++m) {
                for (const oracle::Rational& c : cs) {
                    for (int xi = -8; xi <= 8; ++xi) {
                        const double expect =
                            oracle::to_double(oracle::hyp2f1_exact(p, m, c, oracle::Rational(xi, 2)));
                        const double got = numphase::hyp2f1_terminating(p, m, oracle::to_double(c), xi / 2.0);
                        ++cases;
                        if (expect == 0.0) {
                            // Exact root: no relative scale, so |got| is measured against the largest term.
                            const double scale = static_cast<double>(
                                numphase::hyp2f1_terminating_series(p, m, oracle::to_double(c), xi / 2.0).max_abs_term);
                            ++roots;
                            root_worst = std::max(root_worst, std::abs(got) / scale);
                            continue;
                        }
                        worst = std::max(worst, std::abs(got - expect) / std::abs(expect));
                    }
                }
            }
        }
        rep.add(6, "oracle.hyp2f1_terminating", cases >= 500 && worst <= 1e-12 && root_worst <= 1e-15,
                std::to_string(cases) + " cases, max relative error " + numphase::runner::detail::fmt(worst) + "; " +
                    std::to_string(roots) + " exact roots, max |F|/max term " +
                    numphase::runner::detail::fmt(root_worst));
    }
    return rep;
}

struct Criterion {
    int id;
    const char* title;
};

constexpr Criterion kCriteria[] = {
    {1, "constants mu(d=2) and r_phi"},
    {2, "entropy excess X >= -1e-6 over random draws"},
    {3, "weighted excess X_mu >= -1e-3 for qubit channels"},
    {4, "QND number-distribution invariance"},
    {5, "figure reproduction (qualitative)"},
    {6, "special-function oracle equivalence"},
    {7, "discrete excess identity and symmetry"},
    {8, "convergence under doubled cutoff and grid"},
};

}  // namespace

int main() {
    namespace rn = numphase::runner;
    VerifyReport all;
    auto guarded = [&](int criterion, const char* name, auto&& fn) {
        try {
            all.append(fn());
        } catch (const std::exception& e) {
            all.add(criterion, name, false, std::string("threw: ") + e.what());
        }
    };
    guarded(1, "constants", [] { return rn::constants_checks(); });
    guarded(2, "invariants", [] { return rn::invariant_checks(); });
    guarded(5, "figures", [] {
        VerifyReport rep;
        const auto t0 = std::chrono::steady_clock::now();
        const rn::FigureSet set = rn::run_figures(NUMPHASE_FIGURES_DIR);
        rep.append(rn::figure_assertions(set));
        rep.add(5, "figures.runtime", rn::detail::seconds_since(t0) < rn::kFiguresBudgetSeconds,
                rn::detail::fmt(rn::detail::seconds_since(t0)) + " s");
        rep.append(rn::convergence_checks(set));
        return rep;
    });
    guarded(6, "oracle", oracle_checks);

    bool ok = true;
    for (const Criterion& c : kCriteria) {
        bool pass = true;
        int n = 0;
        for (const rn::Check& check : all.checks) {
            if (check.criterion != c.id) continue;
            ++n;
            pass = pass && check.passed;
        }
        pass = pass && n > 0;
        ok = ok && pass;
        std::printf("%s [%d] %s\n", pass ? "PASS" : "FAIL", c.id, c.title);
        for (const rn::Check& check : all.checks) {
            if (check.criterion != c.id) continue;
            std::printf("    %-8s %s: %s\n", check.passed ? "ok" : "VIOLATED", check.name.c_str(), check.detail.c_str());
        }
    }
    std::fflush(stdout);
    return ok ? 0 : 1;
}
