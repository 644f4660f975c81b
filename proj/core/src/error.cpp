#include "triodyn/error.hpp"

namespace triodyn {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DuplicatePoint: return "DuplicatePoint";
    case ErrorCode::NotSingleCycle: return "NotSingleCycle";
    case ErrorCode::PeriodMismatch: return "PeriodMismatch";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::NoCanonicalOrdering: return "NoCanonicalOrdering";
    case ErrorCode::InvalidRotation: return "InvalidRotation";
    case ErrorCode::DegenerateToEndpoint: return "DegenerateToEndpoint";
    case ErrorCode::CoincidentPoints: return "CoincidentPoints";
    case ErrorCode::NotALoop: return "NotALoop";
    case ErrorCode::NotStronglyConnected: return "NotStronglyConnected";
    case ErrorCode::NotRegular: return "NotRegular";
    case ErrorCode::OutOfDomain: return "OutOfDomain";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace triodyn
