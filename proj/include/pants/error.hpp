#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pants {

enum class ErrorCode {
  MalformedRotation,
  Disconnected,
  NonSpherical,
  UnknownVertex,
  DuplicateMarkedFace,
  BadFaceIndex,
  BadMarkedIndex,
  EmptyLayer,
  NotSimple,
  NotClosed,
  OutOfRange,
  NonPositiveDelta,
  InvalidTau,
  NegativeParameter,
  InvariantViolated,
  OverlappingCrossings,
  NotRealizable,
  ConstructionFailed,
  SearchExhausted,
  LimitExceeded,
  ParseError,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the library carries one of the codes above; what()
// is prefixed with the code name so CLI output stays greppable.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace pants
