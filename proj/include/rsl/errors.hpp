#pragma once

#include <stdexcept>

namespace rsl {

// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotAPolynomial : Error { using Error::Error; };
struct ZeroSequence : Error { using Error::Error; };
struct LengthMismatch : Error { using Error::Error; };
struct ZeroDemeritFactor : Error { using Error::Error; };
struct BadSeed : Error { using Error::Error; };
struct DepthExceedsSigns : Error { using Error::Error; };
struct NotLittlewood : Error { using Error::Error; };
struct RoundingUnsafe : Error { using Error::Error; };
struct BadHex : Error { using Error::Error; };
struct RelationViolation : Error { using Error::Error; };
struct CorruptCheckpoint : Error { using Error::Error; };
struct ObjectiveMismatch : Error { using Error::Error; };

}  // namespace rsl
