#include "pants/error.hpp"

namespace pants {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedRotation: return "MalformedRotation";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::NonSpherical: return "NonSpherical";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::DuplicateMarkedFace: return "DuplicateMarkedFace";
    case ErrorCode::BadFaceIndex: return "BadFaceIndex";
    case ErrorCode::BadMarkedIndex: return "BadMarkedIndex";
    case ErrorCode::EmptyLayer: return "EmptyLayer";
    case ErrorCode::NotSimple: return "NotSimple";
    case ErrorCode::NotClosed: return "NotClosed";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::NonPositiveDelta: return "NonPositiveDelta";
    case ErrorCode::InvalidTau: return "InvalidTau";
    case ErrorCode::NegativeParameter: return "NegativeParameter";
    case ErrorCode::InvariantViolated: return "InvariantViolated";
    case ErrorCode::OverlappingCrossings: return "OverlappingCrossings";
    case ErrorCode::NotRealizable: return "NotRealizable";
    case ErrorCode::ConstructionFailed: return "ConstructionFailed";
    case ErrorCode::SearchExhausted: return "SearchExhausted";
    case ErrorCode::LimitExceeded: return "LimitExceeded";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace pants
