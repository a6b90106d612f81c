#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace dynalg {

enum class ErrorCode {
  DivisionByZero,
  ParseError,
  ZeroDenominator,
  IterationBudgetExceeded,
  NotAFixedPoint,
  ResonantMultiplier,
  ZeroMultiplier,
  LeadingCoefficientNotSolvable,
  DegreeTooSmall,
  PoleAtBasePoint,
  InsufficientOrder,
  DegenerateParametrization,
  InconsistentDegrees,
  ParamMismatch,
  UnresolvedPreimage,
  PreconditionFailed,
  FactorizationBoundExceeded,
  MissingFixture,
  InvalidArgument,
};

std::string_view error_name(ErrorCode code);

/// Every computation error raised by the library carries a machine-readable code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t position, std::string expected, const std::string& message)
      : Error(ErrorCode::ParseError, message),
        position_(position),
        expected_(std::move(expected)) {}

  std::size_t position() const noexcept { return position_; }
  const std::string& expected() const noexcept { return expected_; }

 private:
  std::size_t position_;
  std::string expected_;
};

}  // namespace dynalg
