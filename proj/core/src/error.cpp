#include "cspec/error.hpp"

namespace cspec {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidInput: return "invalid-input";
    case ErrorKind::TooShort: return "too-short";
    case ErrorKind::NoOccurrence: return "no-occurrence";
    case ErrorKind::InsufficientData: return "insufficient-data";
    case ErrorKind::Parse: return "parse";
    case ErrorKind::Io: return "io";
    case ErrorKind::Internal: return "internal";
  }
  return "unknown";
}

}  // namespace cspec
