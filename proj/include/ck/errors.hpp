#pragma once

#include <stdexcept>
#include <string>

namespace ck {

enum class ErrorCode {
  Syntax,
  Index,
  LimitExceeded,
  StrandLimitExceeded,
  StrandMismatch,
  FrozenDirection,
  IndexOutOfRange,
  PresetMismatch,
  ZeroDenominator,
  BindingToZero,
  UnboundVariable,
  NonHalfIntegerPower,
  NotInvertible,
  InvalidArgument,
  Io,
};

const char* error_name(ErrorCode code) noexcept;

// Every domain failure in the library is an ck::Error; the code names the
// failure for the C API and the CLI.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }
  const char* name() const noexcept { return error_name(code_); }

 private:
  ErrorCode code_;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, const std::string& message)
      : Error(ErrorCode::Syntax,
              message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace ck
