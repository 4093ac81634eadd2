#pragma once

#include <stdexcept>
#include <string>

namespace hexwalk {

enum class ErrorKind {
  invalid_parameter,
  dimension_mismatch,
  unsupported_configuration,
  singular_point,
  numerical_failure,
  io,
};

const char* to_string(ErrorKind kind) noexcept;

/// Single exception type for the library; `kind()` drives CLI exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

inline void require(bool condition, ErrorKind kind, const std::string& what) {
  if (!condition) fail(kind, what);
}

}  // namespace hexwalk
