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
#include <string>
#include <vector>

#include "numphase/errors.hpp"
#include "numphase/specfun.hpp"

namespace numphase {

/// p(m) over m = first_label, first_label + 1, ...
/// Oscillators use first_label = 0; the qubit uses -1/2.
struct NumberDistribution {
    std::vector<double> probs;
    double tail_mass = 0.0;
    double first_label = 0.0;

    double total() const {
        CompensatedSum<double> s;
        for (double p : probs) s.add(p);
        return s.value();
    }
};

struct PhaseDistribution {
    PeriodicGrid grid;
};

/// What every scenario kernel returns.
struct ScenarioOutput {
    NumberDistribution number;
    PhaseDistribution phase;
    double raw_trace = 1.0;               // sum of p(m) before renormalization
    double normalization_residual = 0.0;  // max pre-renormalization deviation of either distribution
    double imag_residual = 0.0;           // largest |Im P(theta)| discarded during assembly
};

struct PhaseAssembly {
    std::vector<double> values;
    double imag_residual = 0.0;
};

/// P(theta) = (1/2pi) sum_{m,n} rho_{mn} e^{i s (n-m) theta}.
///
/// `harmonic_step` is s: 1 for a Fock-basis rho, 2 for a parity-pinched pair-index
/// matrix. The double sum is collapsed to one pass over diagonals.
inline PhaseAssembly assemble_phase(const Eigen::MatrixXcd& rho, std::size_t grid_points, unsigned harmonic_step = 1) {
    if (rho.rows() != rho.cols()) fail(ErrorCode::DimensionMismatch, "density matrix must be square");
    if (grid_points < kMinGridPoints) {
        fail(ErrorCode::DomainError, "grid_points must be at least " + std::to_string(kMinGridPoints));
    }
    const Eigen::Index dim = rho.rows();
    // above[k] = sum_m rho(m, m+k), below[k] = sum_m rho(m+k, m)
    std::vector<Complex> above(dim), below(dim);
    for (Eigen::Index k = 0; k < dim; ++k) {
        CompensatedSum<Complex> a, b;
        for (Eigen::Index m = 0; m + k < dim; ++m) {
            a.add(rho(m, m + k));
            b.add(rho(m + k, m));
        }
        above[k] = a.value();
        below[k] = b.value();
    }
    std::vector<Complex> roots(grid_points);
    for (std::size_t j = 0; j < grid_points; ++j) roots[j] = std::polar(1.0, PeriodicGrid::theta_at(j, grid_points));

    PhaseAssembly out;
    out.values.resize(grid_points);
    for (std::size_t j = 0; j < grid_points; ++j) {
        CompensatedSum<Complex> s;
        s.add(above[0]);
        for (Eigen::Index k = 1; k < dim; ++k) {
            const std::size_t idx = (j * static_cast<std::size_t>(k) * harmonic_step) % grid_points;
            s.add(above[k] * roots[idx] + below[k] * std::conj(roots[idx]));
        }
        const Complex v = s.value() / kTwoPi;
        out.values[j] = v.real();
        out.imag_residual = std::max(out.imag_residual, std::abs(v.imag()));
    }
    return out;
}

/// Renormalizes raw distributions and records how far they were from normalized.
inline ScenarioOutput finalize_output(std::vector<double> probs, double tail_mass, std::vector<double> phase_values,
                                      double imag_residual, double first_label = 0.0) {
    ScenarioOutput out{NumberDistribution{}, PhaseDistribution{PeriodicGrid(std::move(phase_values))}};
    CompensatedSum<double> total;
    for (double p : probs) total.add(p);
    const double trace = total.value();
    if (!(trace > 0.0) || !std::isfinite(trace)) {
        fail(ErrorCode::NumericalInstability, "number distribution has non-positive total " + std::to_string(trace));
    }
    const double phase_norm = trapezoid_periodic(out.phase.grid);
    if (!(phase_norm > 0.0)) {
        fail(ErrorCode::NumericalInstability, "phase distribution has non-positive integral");
    }
    out.raw_trace = trace;
    out.normalization_residual = std::max(std::abs(trace + tail_mass - 1.0), std::abs(phase_norm - trace));
    out.imag_residual = imag_residual;

    for (double& p : probs) p /= trace;
    std::vector<double> scaled(out.phase.grid.values().begin(), out.phase.grid.values().end());
    for (double& v : scaled) v /= phase_norm;
    out.number = NumberDistribution{std::move(probs), tail_mass, first_label};
    out.phase = PhaseDistribution{PeriodicGrid(std::move(scaled))};
    return out;
}

}  // namespace numphase
