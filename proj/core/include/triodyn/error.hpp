#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace triodyn {

enum class ErrorCode {
  DuplicatePoint,
  NotSingleCycle,
  PeriodMismatch,
  SyntaxError,
  NoCanonicalOrdering,
  InvalidRotation,
  DegenerateToEndpoint,
  CoincidentPoints,
  NotALoop,
  NotStronglyConnected,
  NotRegular,
  OutOfDomain,
  IoError,
};

std::string_view to_string(ErrorCode code);

// All library failures surface as this exception; code() identifies the
// failure kind so callers (and tests) can branch on it without parsing text.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace triodyn
