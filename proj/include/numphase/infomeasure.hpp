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
#include <limits>
#include <numbers>
#include <span>
#include <string>
#include <vector>

#include "numphase/distributions.hpp"
#include "numphase/errors.hpp"
#include "numphase/specfun.hpp"

namespace numphase {

/// All entropies are in bits.
struct ComplementarityReport {
    double number_entropy_bits = 0.0;
    double phase_knowledge_bits = 0.0;
    double excess_bits = 0.0;
    double weighted_excess_bits = 0.0;
    double mu = 1.0;
    double tail_mass = 0.0;
    double normalization_residual = 0.0;
};

inline double shannon_entropy(std::span<const double> p) {
    CompensatedSum<double> s;
    for (double v : p) {
        if (v > 0.0) s.add(-v * std::log2(v));
    }
    return s.value();
}

/// Entropy of the resolved outcomes; the truncation tail is left out.
inline double shannon_entropy(const NumberDistribution& p) { return shannon_entropy(p.probs); }

namespace detail {

inline void require_normalized(std::span<const double> q, std::size_t d, const char* what) {
    if (q.size() != d) {
        fail(ErrorCode::DimensionMismatch,
             std::string(what) + " has " + std::to_string(q.size()) + " entries, expected d = " + std::to_string(d));
    }
    CompensatedSum<double> s;
    for (double v : q) s.add(v);
    if (std::abs(s.value() - 1.0) > 1e-8) {
        fail(ErrorCode::DomainError, std::string(what) + " is not normalized (sum = " + std::to_string(s.value()) + ")");
    }
}

}  // namespace detail

/// Relative entropy of q with respect to the uniform distribution on d outcomes.
inline double discrete_knowledge(std::span<const double> q, std::size_t d) {
    detail::require_normalized(q, d, "knowledge input");
    CompensatedSum<double> s;
    const double dd = static_cast<double>(d);
    for (double v : q) {
        if (v > 0.0) s.add(v * std::log2(dd * v));
    }
    return s.value();
}

struct PhaseKnowledge {
    double bits = 0.0;
    double clamped_mass = 0.0;  // sum of |P| over negative samples times the grid step
};

/// R = integral of P log2(2 pi P) over one period, with P <= 0 samples contributing nothing.
inline PhaseKnowledge phase_knowledge_detail(const PeriodicGrid& grid) {
    CompensatedSum<double> s;
    double clamped = 0.0;
    for (double v : grid.values()) {
        if (v > 0.0) {
            s.add(v * std::log2(kTwoPi * v));
        } else {
            clamped += -v;
        }
    }
    return {grid.step() * s.value(), grid.step() * clamped};
}

inline double phase_knowledge(const PhaseDistribution& P) { return phase_knowledge_detail(P.grid).bits; }

inline ComplementarityReport entropy_excess(const NumberDistribution& p, const PhaseDistribution& P, double mu = 1.0,
                                            double normalization_residual = 0.0) {
    if (!(mu > 0.0)) fail(ErrorCode::DomainError, "mu must be positive");
    ComplementarityReport r;
    const PhaseKnowledge k = phase_knowledge_detail(P.grid);
    r.number_entropy_bits = shannon_entropy(p);
    r.phase_knowledge_bits = k.bits;
    r.excess_bits = r.number_entropy_bits - r.phase_knowledge_bits;
    r.mu = mu;
    r.weighted_excess_bits = r.number_entropy_bits - mu * r.phase_knowledge_bits;
    r.tail_mass = p.tail_mass;
    r.normalization_residual = std::max(normalization_residual, k.clamped_mass);
    return r;
}

inline ComplementarityReport entropy_excess(const ScenarioOutput& out, double mu = 1.0) {
    return entropy_excess(out.number, out.phase, mu, out.normalization_residual);
}

/// X^mu = H - mu R.
inline double weighted_excess(const NumberDistribution& p, const PhaseDistribution& P, double mu) {
    if (!(mu > 0.0)) fail(ErrorCode::DomainError, "mu must be positive");
    return shannon_entropy(p) - mu * phase_knowledge(P);
}

/// X(A,B) = H(A) - R(B) for two d-outcome distributions.
inline double discrete_excess_pair(std::span<const double> pA, std::span<const double> pB, std::size_t d) {
    detail::require_normalized(pA, d, "pA");
    return shannon_entropy(pA) - discrete_knowledge(pB, d);
}

/// H and R of one member of a one-parameter state family.
struct EntropyPair {
    double h_bits;
    double r_bits;
};

struct MuSearchOptions {
    double lo = 0.0;
    double hi = std::numbers::pi;
    std::size_t scan_points = 1025;
    // When non-empty, only these parameter values are examined and no refinement is done.
    std::vector<double> explicit_points;
};

struct MuSearchResult {
    double mu = 0.0;
    double argmin = 0.0;
    std::size_t evaluations = 0;
};

inline constexpr double kKnowledgeFloor = 1e-12;

/// Largest mu with H - mu R >= 0 over the family: the infimum of H/R over states with
/// R above kKnowledgeFloor. Dense scan, then golden-section on the bracketing cell.
template <class Family>
MuSearchResult mu_search(Family&& family, double tol, const MuSearchOptions& opts = {}) {
    if (!(tol > 0.0)) fail(ErrorCode::DomainError, "tol must be positive");
    MuSearchResult res;
    auto ratio = [&](double x) {
        ++res.evaluations;
        const EntropyPair e = family(x);
        return e.r_bits < kKnowledgeFloor ? std::numeric_limits<double>::infinity() : e.h_bits / e.r_bits;
    };

    std::vector<double> xs = opts.explicit_points;
    if (xs.empty()) {
        if (opts.scan_points < 3 || !(opts.hi > opts.lo)) fail(ErrorCode::DomainError, "invalid mu_search scan range");
        xs.resize(opts.scan_points);
        for (std::size_t i = 0; i < xs.size(); ++i) {
            xs[i] = opts.lo + (opts.hi - opts.lo) * static_cast<double>(i) / static_cast<double>(xs.size() - 1);
        }
    }
    std::vector<double> vals(xs.size());
    std::size_t best = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        vals[i] = ratio(xs[i]);
        if (vals[i] < vals[best]) best = i;
    }
    if (!std::isfinite(vals[best])) {
        fail(ErrorCode::NoInteriorMinimum, "every scanned state has phase knowledge below the floor");
    }
    res.mu = vals[best];
    res.argmin = xs[best];
    if (!opts.explicit_points.empty()) return res;

    double a = xs[best == 0 ? 0 : best - 1];
    double b = xs[best + 1 == xs.size() ? best : best + 1];
    const double g = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - g * (b - a);
    double d = a + g * (b - a);
    double fc = ratio(c);
    double fd = ratio(d);
    while (b - a > tol * 1e-3) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - g * (b - a);
            fc = ratio(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + g * (b - a);
            fd = ratio(d);
        }
    }
    const double x = 0.5 * (a + b);
    const double fx = ratio(x);
    if (fx < res.mu) {
        res.mu = fx;
        res.argmin = x;
    }
    return res;
}

}  // namespace numphase
