#include "minortrace/error.hpp"

namespace minortrace {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::RingMismatch: return "RingMismatch";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::NotSquare: return "NotSquare";
    case ErrorCode::TooSmall: return "TooSmall";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::NotDivisible: return "NotDivisible";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::UnsupportedRing: return "UnsupportedRing";
    case ErrorCode::InvalidRing: return "InvalidRing";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::StructurePreconditionFailed: return "StructurePreconditionFailed";
    case ErrorCode::NoNilpotentScalar: return "NoNilpotentScalar";
    case ErrorCode::TooLargeToEnumerate: return "TooLargeToEnumerate";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace minortrace
