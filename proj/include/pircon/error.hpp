#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pircon {

enum class ErrorCode {
  CycleDetected,
  IndexOutOfRange,
  NotComparable,
  MissingBound,
  NotAutomorphism,
  SizeMismatch,
  MissingTop,
  NotAnSpm,
  ExtremeNotUnique,
  ClaimViolation,
  EqualInputs,
  NoCandidate,
  MissingLabel,
  NonUniqueDecreasing,
  NotBounded,
  NotGraded,
  NotPure,
  FormulaMismatch,
  ParseError,
  InvalidConfig,
};

std::string_view to_string(ErrorCode code);

/// Single exception type for every failure path; `code()` names the violated
/// contract so that callers (and the CLI) can report it machine-readably.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace pircon
