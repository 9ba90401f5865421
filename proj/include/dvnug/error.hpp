#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dvnug {

enum class ErrorCode {
  NonPositive,
  NonOdd,
  OutOfRange,
  NotCoprime,
  DimensionMismatch,
  FrequencyNotInLambda,
  NotAFrameSuspected,
  InvalidBounds,
  Precondition,
  Parse,
};

std::string_view to_string(ErrorCode code);

/// Every recoverable failure in the library is reported through this type.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace dvnug
