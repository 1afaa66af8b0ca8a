#pragma once

#include "rsl/poly.hpp"

namespace rsl {

// FFT-accelerated convolution with certified rounding.  Output is identical
// to mul(a, b); throws RoundingUnsafe when exact rounding cannot be
// guaranteed (coefficient bound too large for double precision) or when any
// observed pre-rounding deviation reaches 1e-6.  Pass max_deviation to
// observe how far the floating values were from integers.
IntPoly mul_fast(const IntPoly& a, const IntPoly& b, double* max_deviation = nullptr);

// mul_fast with automatic fallback to exact convolution on RoundingUnsafe.
IntPoly mul_auto(const IntPoly& a, const IntPoly& b);

inline constexpr double kFftDeviationGuard = 1e-6;

}  // namespace rsl
