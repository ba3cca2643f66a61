#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace geoprod {

enum class ErrorCode {
  OutOfRange,
  SelfLoop,
  Disconnected,
  BadParams,
  Unsupported,
  Overflow,
  EmptySet,
  TooSmall,
  ParseError,
  FormulaViolation,
  OrientationError,
};

std::string_view to_string(ErrorCode code);

/// Single exception type for the library; `code()` tells callers which
/// contract was violated.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace geoprod
