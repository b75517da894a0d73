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

#include <stdexcept>
#include <string>
#include <string_view>

namespace numphase {

enum class ErrorCode {
    OrderTooLarge,
    PoleInSeries,
    Overflow,
    DomainError,
    DimensionMismatch,
    TailTooHeavy,
    DegenerateSqueeze,
    NumericalInstability,
    NoInteriorMinimum,
    BranchInstability,
    NonRealDistribution,
    ConfigError,
    IoError,
};

inline std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::OrderTooLarge: return "OrderTooLarge";
        case ErrorCode::PoleInSeries: return "PoleInSeries";
        case ErrorCode::Overflow: return "Overflow";
        case ErrorCode::DomainError: return "DomainError";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::TailTooHeavy: return "TailTooHeavy";
        case ErrorCode::DegenerateSqueeze: return "DegenerateSqueeze";
        case ErrorCode::NumericalInstability: return "NumericalInstability";
        case ErrorCode::NoInteriorMinimum: return "NoInteriorMinimum";
        case ErrorCode::BranchInstability: return "BranchInstability";
        case ErrorCode::NonRealDistribution: return "NonRealDistribution";
        case ErrorCode::ConfigError: return "ConfigError";
        case ErrorCode::IoError: return "IoError";
    }
    return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code), detail_(message) {}

    ErrorCode code() const noexcept { return code_; }

    /// The message without the code prefix.
    const std::string& detail() const noexcept { return detail_; }

   private:
    ErrorCode code_;
    std::string detail_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

}  // namespace numphase
