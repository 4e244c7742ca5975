#include "nijkit/error.hpp"

namespace nijkit {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::Parse: return "ParseError";
    case ErrorCode::UnknownIdentifier: return "UnknownIdentifier";
    case ErrorCode::ChartMismatch: return "ChartMismatch";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::DegreeOverflow: return "DegreeOverflow";
    case ErrorCode::Io: return "IoError";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::EvaluationFailure: return "EvaluationFailure";
    case ErrorCode::NotAFullSquare: return "NotAFullSquare";
    case ErrorCode::DegenerateOmega: return "DegenerateOmega";
    case ErrorCode::NotSemisimpleAtPoint: return "NotSemisimpleAtPoint";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::EigenvalueCollision: return "EigenvalueCollision";
    case ErrorCode::NonIntegrableMonomial: return "NonIntegrableMonomial";
    case ErrorCode::ConsistencyViolation: return "ConsistencyViolation";
    case ErrorCode::NotClosed: return "NotClosed";
    case ErrorCode::NotCompanionAtPoint: return "NotCompanionAtPoint";
    case ErrorCode::SingularReduction: return "SingularReduction";
    case ErrorCode::IncompatibleSystem: return "IncompatibleSystem";
    case ErrorCode::PreconditionFailed: return "PreconditionFailed";
    case ErrorCode::ResidualFailure: return "ResidualFailure";
    case ErrorCode::Internal: return "InternalError";
  }
  return "UnknownError";
}

bool is_input_error(ErrorCode code) {
  switch (code) {
    case ErrorCode::Parse:
    case ErrorCode::UnknownIdentifier:
    case ErrorCode::ChartMismatch:
    case ErrorCode::InvalidArgument:
    case ErrorCode::DegreeOverflow:
    case ErrorCode::Io:
      return true;
    default:
      return false;
  }
}

}  // namespace nijkit
