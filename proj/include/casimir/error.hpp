#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace casimir {

enum class ErrorCode {
  AngleOutOfRange,
  NonPositiveDimension,
  DegenerateTriangle,
  NumericalDomain,
  SingularSeparation,
  NonPositiveSeparation,
  QuadratureNonConvergence,
  NotUnimodal,
  InvalidBracket,
  DivisionByZeroForce,
  InvalidArgument,
  MissingKey,
  MalformedNumber,
  UnknownKey,
  EmptySweep,
  AllRowsFailed,
  InvalidSweep,
  SinkWriteFailure,
  UnknownFigureTag,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries a machine-readable code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Raised by the R_eff search when the coarse scan finds several separated
/// local maxima of the effectiveness curve. All candidates are returned.
class NotUnimodalError : public Error {
 public:
  NotUnimodalError(std::vector<double> candidates, const std::string& what)
      : Error(ErrorCode::NotUnimodal, what), candidates_(std::move(candidates)) {}

  const std::vector<double>& candidates() const noexcept { return candidates_; }

 private:
  std::vector<double> candidates_;
};

}  // namespace casimir
