#pragma once

#include <stdexcept>
#include <string>

namespace cws {

enum class ErrorCode {
  InvalidInput,
  IsolatedVertex,
  ResourceLimit,
  Parse,
};

/// Exception type used throughout the core. The C API maps `code()` onto
/// its status enum.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void throw_invalid(const std::string& message) {
  throw Error(ErrorCode::InvalidInput, message);
}

}  // namespace cws
