#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gitss {

enum class ErrorCode {
  OutOfRange,
  TrivialSubgroup,
  InvalidSubgroup,
  MalformedFiltration,
  MalformedProfile,
  ProfileMismatch,
  SingularMatrix,
  DimensionMismatch,
  TooLarge,
  InvalidDelta,
  MalformedFlag,
  DegenerateFlag,
  NotCoordinateFlag,
  MalformedForm,
  InvalidRank,
  NotExceptional,
  ParseError,
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::TrivialSubgroup: return "TrivialSubgroup";
    case ErrorCode::InvalidSubgroup: return "InvalidSubgroup";
    case ErrorCode::MalformedFiltration: return "MalformedFiltration";
    case ErrorCode::MalformedProfile: return "MalformedProfile";
    case ErrorCode::ProfileMismatch: return "ProfileMismatch";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::InvalidDelta: return "InvalidDelta";
    case ErrorCode::MalformedFlag: return "MalformedFlag";
    case ErrorCode::DegenerateFlag: return "DegenerateFlag";
    case ErrorCode::NotCoordinateFlag: return "NotCoordinateFlag";
    case ErrorCode::MalformedForm: return "MalformedForm";
    case ErrorCode::InvalidRank: return "InvalidRank";
    case ErrorCode::NotExceptional: return "NotExceptional";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// Every library failure is reported through this one exception type; the
/// code identifies the violated precondition.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

inline void require(bool condition, ErrorCode code, const std::string& what) {
  if (!condition) fail(code, what);
}

}  // namespace gitss
