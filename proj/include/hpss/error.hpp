#pragma once

#include <stdexcept>
#include <string>

namespace hpss {

enum class ErrorCode {
  SchemaError,
  ValidationFailure,
  NotPoisson,
  DegreeMismatch,
  SideMismatch,
  UnsupportedPair,
  NonIntegrable,
  BadJ,
  JacobiFailure,
  NotACycle,
  NotE2Class,
  SquareZeroViolation,
  ChainMapViolation,
  NoneFound,
  InvalidArgument,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace hpss
