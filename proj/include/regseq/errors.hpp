#pragma once

#include <stdexcept>
#include <string>

namespace regseq {

enum class ErrorKind {
  InvalidParameter,
  EmptyInput,
  OverflowError,
  NoValidCovering,
  InvalidCovering,
  InvalidWitness,
  InvalidInput,
  TooLarge,
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidParameter: return "invalid-parameter";
    case ErrorKind::EmptyInput: return "empty-input";
    case ErrorKind::OverflowError: return "overflow-error";
    case ErrorKind::NoValidCovering: return "no-valid-covering";
    case ErrorKind::InvalidCovering: return "invalid-covering";
    case ErrorKind::InvalidWitness: return "invalid-witness";
    case ErrorKind::InvalidInput: return "invalid-input";
    case ErrorKind::TooLarge: return "too-large";
  }
  return "unknown";
}

// Raised by any operation whose contract names a failure mode. The kind is
// stable API; the message is for humans.
class DomainError : public std::runtime_error {
 public:
  DomainError(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw DomainError(kind, message);
}

}  // namespace regseq
