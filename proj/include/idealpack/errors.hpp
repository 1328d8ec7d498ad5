/*
   Copyright 2026 The idealpack Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef IDEALPACK_ERRORS_HPP
#define IDEALPACK_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace idealpack {

enum class ErrorKind {
    // input validation
    InvalidArgument,
    NotMonic,
    Reducible,
    NotMaximal,
    IrreducibilityUnknown,
    NotPrime,
    NotIntegral,
    ZeroIdeal,
    DimensionMismatch,
    DomainError,
    RankTooLarge,
    BoundTooLarge,
    ScaleTooLarge,
    Unsupported,
    ParseError,
    // data
    MissingEntry,
    // numerics
    PrecisionExhausted,
    DeterminantMismatch,
    AmbiguousCeiling,
    // internal consistency (a violated invariant means a bug, not bad input)
    InvariantViolation,
    DegenerateLevel,
};

constexpr std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::InvalidArgument: return "InvalidArgument";
        case ErrorKind::NotMonic: return "NotMonic";
        case ErrorKind::Reducible: return "Reducible";
        case ErrorKind::NotMaximal: return "NotMaximal";
        case ErrorKind::IrreducibilityUnknown: return "IrreducibilityUnknown";
        case ErrorKind::NotPrime: return "NotPrime";
        case ErrorKind::NotIntegral: return "NotIntegral";
        case ErrorKind::ZeroIdeal: return "ZeroIdeal";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::DomainError: return "DomainError";
        case ErrorKind::RankTooLarge: return "RankTooLarge";
        case ErrorKind::BoundTooLarge: return "BoundTooLarge";
        case ErrorKind::ScaleTooLarge: return "ScaleTooLarge";
        case ErrorKind::Unsupported: return "Unsupported";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::MissingEntry: return "MissingEntry";
        case ErrorKind::PrecisionExhausted: return "PrecisionExhausted";
        case ErrorKind::DeterminantMismatch: return "DeterminantMismatch";
        case ErrorKind::AmbiguousCeiling: return "AmbiguousCeiling";
        case ErrorKind::InvariantViolation: return "InvariantViolation";
        case ErrorKind::DegenerateLevel: return "DegenerateLevel";
    }
    return "Unknown";
}

/// Coarse classification used for process exit codes.
enum class ErrorClass { Validation, DataMissing, Numerical, Internal };

constexpr ErrorClass classify(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::MissingEntry:
            return ErrorClass::DataMissing;
        case ErrorKind::PrecisionExhausted:
        case ErrorKind::DeterminantMismatch:
        case ErrorKind::AmbiguousCeiling:
            return ErrorClass::Numerical;
        case ErrorKind::InvariantViolation:
        case ErrorKind::DegenerateLevel:
            return ErrorClass::Internal;
        default:
            return ErrorClass::Validation;
    }
}

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

  private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) { throw Error(kind, message); }

inline void require(bool condition, ErrorKind kind, const std::string& message) {
    if (!condition) fail(kind, message);
}

}  // namespace idealpack

#endif
