#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cspec {

enum class ErrorKind {
  InvalidInput,
  TooShort,
  NoOccurrence,
  InsufficientData,
  Parse,
  Io,
  Internal,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Single exception type for the library; `kind()` tells callers (and the CLI
/// exit-code mapping) which contract was violated.
class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

}  // namespace cspec
