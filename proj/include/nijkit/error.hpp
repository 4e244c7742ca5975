#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace nijkit {

enum class ErrorCode {
  // input / usage
  Parse,
  UnknownIdentifier,
  ChartMismatch,
  InvalidArgument,
  DegreeOverflow,
  Io,
  // mathematical obstructions
  DivisionByZero,
  EvaluationFailure,
  NotAFullSquare,
  DegenerateOmega,
  NotSemisimpleAtPoint,
  ShapeMismatch,
  EigenvalueCollision,
  NonIntegrableMonomial,
  ConsistencyViolation,
  NotClosed,
  NotCompanionAtPoint,
  SingularReduction,
  IncompatibleSystem,
  PreconditionFailed,
  // bugs
  ResidualFailure,
  Internal,
};

std::string_view to_string(ErrorCode code);

/// True for errors caused by malformed input rather than a failed check.
bool is_input_error(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::string stage = {})
      : std::runtime_error(message), code_(code), stage_(std::move(stage)) {}

  ErrorCode code() const noexcept { return code_; }
  const std::string& stage() const noexcept { return stage_; }

  /// Returns a copy tagged with a pipeline stage name, keeping any inner stage.
  Error with_stage(const std::string& stage) const {
    return Error(code_, what(), stage_.empty() ? stage : stage + "/" + stage_);
  }

 private:
  ErrorCode code_;
  std::string stage_;
};

/// Error raised by the expression parser. The offset is 0-based into the source.
class ParseError : public Error {
 public:
  ParseError(ErrorCode code, const std::string& message, std::size_t offset)
      : Error(code, message + " at offset " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace nijkit
