#pragma once

#include <stdexcept>
#include <string>

namespace imult {

enum class ErrorCode {
  DivisionByZero,
  ZeroPolynomial,
  TruncationExhausted,
  InvalidArgument,
  HypothesisViolated,
  InfiniteMultiplicity,
  Overflow,
  Parse,
  AmbiguousSplit,
};

const char* error_code_name(ErrorCode code);

/// Domain error raised by the library. Usage errors in the CLI are reported separately.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace imult
