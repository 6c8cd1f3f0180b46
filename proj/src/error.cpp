#include "shocklab/error.hpp"

namespace shocklab {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonMonotoneBreakpoints: return "NonMonotoneBreakpoints";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::EmptyMesh: return "EmptyMesh";
    case ErrorCode::DegenerateChord: return "DegenerateChord";
    case ErrorCode::BoundaryPoint: return "BoundaryPoint";
    case ErrorCode::COutOfRange: return "COutOfRange";
    case ErrorCode::WrongTriplet: return "WrongTriplet";
    case ErrorCode::ChordSlopeViolated: return "ChordSlopeViolated";
    case ErrorCode::EmptyInterval: return "EmptyInterval";
    case ErrorCode::NotConvex: return "NotConvex";
    case ErrorCode::StateOutOfRange: return "StateOutOfRange";
    case ErrorCode::EqualStates: return "EqualStates";
    case ErrorCode::EventOverflow: return "EventOverflow";
    case ErrorCode::NonPositiveTime: return "NonPositiveTime";
    case ErrorCode::WindowExceeded: return "WindowExceeded";
    case ErrorCode::NotATriplet: return "NotATriplet";
    case ErrorCode::HypothesisNotChecked: return "HypothesisNotChecked";
    case ErrorCode::ConditionsViolated: return "ConditionsViolated";
    case ErrorCode::NoRootInInterval: return "NoRootInInterval";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ValidationError: return "ValidationError";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace shocklab
