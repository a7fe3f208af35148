// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace discordant {

enum class ErrorCode {
  NonHermitian,
  NotPositiveSemidefinite,
  DimensionMismatch,
  InvalidParameters,
  OutOfRange,
  BadWeights,
  NonOrthogonalBasis,
  BadRank,
  BadParameterCount,
  IncompleteBasis,
  NotNormalized,
  NotDensityMatrix,
  SupportMismatch,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so
/// callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonHermitian: return "NonHermitian";
    case ErrorCode::NotPositiveSemidefinite: return "NotPositiveSemidefinite";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::InvalidParameters: return "InvalidParameters";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::BadWeights: return "BadWeights";
    case ErrorCode::NonOrthogonalBasis: return "NonOrthogonalBasis";
    case ErrorCode::BadRank: return "BadRank";
    case ErrorCode::BadParameterCount: return "BadParameterCount";
    case ErrorCode::IncompleteBasis: return "IncompleteBasis";
    case ErrorCode::NotNormalized: return "NotNormalized";
    case ErrorCode::NotDensityMatrix: return "NotDensityMatrix";
    case ErrorCode::SupportMismatch: return "SupportMismatch";
  }
  return "Unknown";
}

}  // namespace discordant
