#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pierce {

enum class ErrorCode {
  NotMonotone,
  MalformedTail,
  IllFormedReplacement,
  ThetaViolation,
  OutOfDomain,
  NonTermination,
  InsufficientPrefix,
  EmptyGenerator,
  BadRange,
  NotInImage,
  DegenerateInput,
  InvalidRule,
  PrecisionExhausted,
  ParseError,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Domain error raised by every operation in the library. The code is the
/// stable, machine-readable part; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace pierce
