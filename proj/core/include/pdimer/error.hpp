#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pdimer {

enum class ErrorKind {
  NonHermitianInput,
  NonFiniteInput,
  NoConvergence,
  NotPositiveSemidefinite,
  InvalidDensityMatrix,
  InvalidXState,
  DomainError,
  InvalidSeparation,
  DegenerateCase,
  DegenerateRates,
  FamilyViolation,
  PositivityLost,
  VerificationFailed,
  ConfigError,
  IoError,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Single exception type for the library; callers dispatch on kind().
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind), message_(message) {}

  ErrorKind kind() const noexcept { return kind_; }
  bool is_io() const noexcept { return kind_ == ErrorKind::IoError; }
  /// Message without the kind prefix.
  const std::string& detail() const noexcept { return message_; }

 private:
  ErrorKind kind_;
  std::string message_;
};

}  // namespace pdimer
