#include "pdimer/error.hpp"

namespace pdimer {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NonHermitianInput: return "NonHermitianInput";
    case ErrorKind::NonFiniteInput: return "NonFiniteInput";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::NotPositiveSemidefinite: return "NotPositiveSemidefinite";
    case ErrorKind::InvalidDensityMatrix: return "InvalidDensityMatrix";
    case ErrorKind::InvalidXState: return "InvalidXState";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::InvalidSeparation: return "InvalidSeparation";
    case ErrorKind::DegenerateCase: return "DegenerateCase";
    case ErrorKind::DegenerateRates: return "DegenerateRates";
    case ErrorKind::FamilyViolation: return "FamilyViolation";
    case ErrorKind::PositivityLost: return "PositivityLost";
    case ErrorKind::VerificationFailed: return "VerificationFailed";
    case ErrorKind::ConfigError: return "ConfigError";
    case ErrorKind::IoError: return "IoError";
  }
  return "Error";
}

}  // namespace pdimer
