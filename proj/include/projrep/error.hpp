#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace projrep {

enum class ErrorCode {
  ClosureTooLarge,
  NotPermutation,
  NotPiSeparable,
  ComplementSearchExhausted,
  NotNormal,
  NotSubgroup,
  ModulusMismatch,
  GroupTooLargeForH2,
  NotCentral,
  NotCyclic,
  NumericDegeneracy,
  CrossCheckMismatch,
  DegreeNotIntegral,
  CocycleMismatch,
  InertiaMismatch,
  PhaseInstability,
  FactorizationFailure,
  ReconstructionFailure,
  UnknownGroup,
  BadCoclassIndex,
  ParseError,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code);

// Single exception type for the library; callers switch on code().
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
    case ErrorCode::ClosureTooLarge: return "ClosureTooLarge";
    case ErrorCode::NotPermutation: return "NotPermutation";
    case ErrorCode::NotPiSeparable: return "NotPiSeparable";
    case ErrorCode::ComplementSearchExhausted: return "ComplementSearchExhausted";
    case ErrorCode::NotNormal: return "NotNormal";
    case ErrorCode::NotSubgroup: return "NotSubgroup";
    case ErrorCode::ModulusMismatch: return "ModulusMismatch";
    case ErrorCode::GroupTooLargeForH2: return "GroupTooLargeForH2";
    case ErrorCode::NotCentral: return "NotCentral";
    case ErrorCode::NotCyclic: return "NotCyclic";
    case ErrorCode::NumericDegeneracy: return "NumericDegeneracy";
    case ErrorCode::CrossCheckMismatch: return "CrossCheckMismatch";
    case ErrorCode::DegreeNotIntegral: return "DegreeNotIntegral";
    case ErrorCode::CocycleMismatch: return "CocycleMismatch";
    case ErrorCode::InertiaMismatch: return "InertiaMismatch";
    case ErrorCode::PhaseInstability: return "PhaseInstability";
    case ErrorCode::FactorizationFailure: return "FactorizationFailure";
    case ErrorCode::ReconstructionFailure: return "ReconstructionFailure";
    case ErrorCode::UnknownGroup: return "UnknownGroup";
    case ErrorCode::BadCoclassIndex: return "BadCoclassIndex";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace projrep
