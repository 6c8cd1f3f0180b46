#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace shocklab {

enum class ErrorCode {
  NonMonotoneBreakpoints,
  LengthMismatch,
  EmptyMesh,
  DegenerateChord,
  BoundaryPoint,
  COutOfRange,
  WrongTriplet,
  ChordSlopeViolated,
  EmptyInterval,
  NotConvex,
  StateOutOfRange,
  EqualStates,
  EventOverflow,
  NonPositiveTime,
  WindowExceeded,
  NotATriplet,
  HypothesisNotChecked,
  ConditionsViolated,
  NoRootInInterval,
  ParseError,
  ValidationError,
  IoError,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace shocklab
