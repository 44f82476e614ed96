#include "casimir/error.hpp"

namespace casimir {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::AngleOutOfRange: return "AngleOutOfRange";
    case ErrorCode::NonPositiveDimension: return "NonPositiveDimension";
    case ErrorCode::DegenerateTriangle: return "DegenerateTriangle";
    case ErrorCode::NumericalDomain: return "NumericalDomain";
    case ErrorCode::SingularSeparation: return "SingularSeparation";
    case ErrorCode::NonPositiveSeparation: return "NonPositiveSeparation";
    case ErrorCode::QuadratureNonConvergence: return "QuadratureNonConvergence";
    case ErrorCode::NotUnimodal: return "NotUnimodal";
    case ErrorCode::InvalidBracket: return "InvalidBracket";
    case ErrorCode::DivisionByZeroForce: return "DivisionByZeroForce";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::MissingKey: return "MissingKey";
    case ErrorCode::MalformedNumber: return "MalformedNumber";
    case ErrorCode::UnknownKey: return "UnknownKey";
    case ErrorCode::EmptySweep: return "EmptySweep";
    case ErrorCode::AllRowsFailed: return "AllRowsFailed";
    case ErrorCode::InvalidSweep: return "InvalidSweep";
    case ErrorCode::SinkWriteFailure: return "SinkWriteFailure";
    case ErrorCode::UnknownFigureTag: return "UnknownFigureTag";
  }
  return "Unknown";
}

}  // namespace casimir
