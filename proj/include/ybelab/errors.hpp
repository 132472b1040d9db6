#pragma once

#include <stdexcept>
#include <string>

namespace ybelab {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// usage-type failures (exit code 2 in the CLI)
struct UsageError : Error {
  using Error::Error;
};
struct DimensionMismatch : UsageError {
  using UsageError::UsageError;
};
struct UnknownModel : UsageError {
  using UsageError::UsageError;
};
struct MissingR : UsageError {
  using UsageError::UsageError;
};
struct InvalidPayload : UsageError {
  using UsageError::UsageError;
};

// domain/singularity failures (exit code 3 in the CLI)
struct DomainViolation : Error {
  using Error::Error;
};
struct PoleProximity : DomainViolation {
  using DomainViolation::DomainViolation;
};
struct NonConvergence : DomainViolation {
  using DomainViolation::DomainViolation;
};
struct SingularPayload : DomainViolation {
  using DomainViolation::DomainViolation;
};
struct StencilOutOfDomain : DomainViolation {
  using DomainViolation::DomainViolation;
};

}  // namespace ybelab
