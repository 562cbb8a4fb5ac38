#pragma once

#include <stdexcept>

namespace cohdis {

/// Base class of every error thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// State validation
struct HermiticityViolation : Error { using Error::Error; };
struct TraceViolation : Error { using Error::Error; };
struct NotPositiveSemidefinite : Error { using Error::Error; };
struct ComplementarityViolation : Error { using Error::Error; };

// Domain / argument checks
struct RankOutOfRange : Error { using Error::Error; };
struct DimensionTooSmall : Error { using Error::Error; };
struct ParamOutOfRange : Error { using Error::Error; };
struct DimensionGuardExceeded : Error { using Error::Error; };
struct BufferSmallerThanCoherent : Error { using Error::Error; };

// Numerical cross-checks
struct NegativeDispersion : Error { using Error::Error; };
struct FlatObjective : Error { using Error::Error; };

// Tooling
struct ConfigInvalid : Error { using Error::Error; };
struct OutputUnwritable : Error { using Error::Error; };
struct IoError : Error { using Error::Error; };

}  // namespace cohdis
