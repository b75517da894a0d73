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

#include <fstream>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "numphase/errors.hpp"
#include "numphase/runner/sweep.hpp"

namespace numphase::runner {

inline constexpr const char* kCsvHeader = "swept_value,H_bits,R_bits,X_bits,Xmu_bits,mu,tail_mass,norm_residual";

inline void write_csv(std::ostream& os, const std::vector<SweepRow>& rows) {
    os << kCsvHeader << '\n';
    for (const SweepRow& r : rows) {
        const ComplementarityReport& c = r.report;
        os << format_value(r.swept_value) << ',' << format_value(c.number_entropy_bits) << ','
           << format_value(c.phase_knowledge_bits) << ',' << format_value(c.excess_bits) << ','
           << format_value(c.weighted_excess_bits) << ',' << format_value(c.mu) << ',' << format_value(c.tail_mass)
           << ',' << format_value(c.normalization_residual) << '\n';
    }
}

inline nlohmann::ordered_json rows_to_json(const std::vector<SweepRow>& rows) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const SweepRow& r : rows) {
        const ComplementarityReport& c = r.report;
        arr.push_back({{"swept_value", r.swept_value},
                       {"H_bits", c.number_entropy_bits},
                       {"R_bits", c.phase_knowledge_bits},
                       {"X_bits", c.excess_bits},
                       {"Xmu_bits", c.weighted_excess_bits},
                       {"mu", c.mu},
                       {"tail_mass", c.tail_mass},
                       {"norm_residual", c.normalization_residual}});
    }
    return arr;
}

inline void write_json(std::ostream& os, const std::vector<SweepRow>& rows) { os << rows_to_json(rows).dump(2) << '\n'; }

/// Long format: one line per (row, grid sample).
inline void write_phase_csv(std::ostream& os, const std::vector<SweepRow>& rows) {
    os << "swept_value,theta,P\n";
    for (const SweepRow& r : rows) {
        const PeriodicGrid& g = r.output.phase.grid;
        for (std::size_t k = 0; k < g.size(); ++k) {
            os << format_value(r.swept_value) << ',' << format_value(g.theta(k)) << ',' << format_value(g[k]) << '\n';
        }
    }
}

template <class Writer>
void write_file(const std::string& path, Writer&& writer) {
    std::ofstream out(path);
    if (!out) fail(ErrorCode::IoError, "cannot open '" + path + "' for writing");
    writer(out);
    out.flush();
    if (!out) fail(ErrorCode::IoError, "write to '" + path + "' failed");
}

}  // namespace numphase::runner
