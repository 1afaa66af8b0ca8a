#pragma once

#include <bit>
#include <cstdint>

namespace rsl::bits {

// Sequences are packed with bit j set iff the coefficient of z^j is -1,
// so popcounts of XORs count disagreements of +-1 values.

inline std::uint64_t mask(int n) {
  return n >= 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << n) - 1;
}

inline std::uint64_t reverse(std::uint64_t v, int len) {
  v = ((v >> 1) & 0x5555555555555555ULL) | ((v & 0x5555555555555555ULL) << 1);
  v = ((v >> 2) & 0x3333333333333333ULL) | ((v & 0x3333333333333333ULL) << 2);
  v = ((v >> 4) & 0x0F0F0F0F0F0F0F0FULL) | ((v & 0x0F0F0F0F0F0F0F0FULL) << 4);
  v = ((v >> 8) & 0x00FF00FF00FF00FFULL) | ((v & 0x00FF00FF00FF00FFULL) << 8);
  v = ((v >> 16) & 0x0000FFFF0000FFFFULL) | ((v & 0x0000FFFF0000FFFFULL) << 16);
  v = (v >> 32) | (v << 32);
  return len >= 64 ? v : v >> (64 - len);
}

// Negate coefficients at odd exponents (the z -> -z involution).
inline std::uint64_t alternate(std::uint64_t x, int len) {
  return (x ^ 0xAAAAAAAAAAAAAAAAULL) & mask(len);
}

inline std::uint64_t negate(std::uint64_t x, int len) { return ~x & mask(len); }

// C_{x,y}(s) = sum_j x_{j+s} y_j with +-1 values, zero outside [0, len).
inline int cross_corr(std::uint64_t x, std::uint64_t y, int len, int s) {
  if (s >= len || -s >= len) return 0;
  if (s >= 0) {
    const int n = len - s;
    return n - 2 * std::popcount(((x >> s) ^ y) & mask(n));
  }
  const int n = len + s;
  return n - 2 * std::popcount((x ^ (y >> -s)) & mask(n));
}

// Sum over all shifts of C_{x,x}(s)^2.
inline std::int64_t norm4_4(std::uint64_t x, int len) {
  std::int64_t total = static_cast<std::int64_t>(len) * len;
  for (int s = 1; s < len; ++s) {
    const std::int64_t c = len - s - 2 * std::popcount((x ^ (x >> s)) & mask(len - s));
    total += 2 * c * c;
  }
  return total;
}

// Coefficients of the polynomial product x*y (lengths len each), written to
// out[0 .. 2len-2].  Needs the bit-reversal of y.
inline void conv_from_rev(std::uint64_t x, std::uint64_t rev_y, int len, int* out) {
  for (int m = 0; m <= 2 * len - 2; ++m)
    out[m] = cross_corr(rev_y, x, len, len - 1 - m);
}

// Sum of squared product coefficients ||x*y||_2^2 via the reversal of y.
inline std::int64_t conv_norm_sq_from_rev(std::uint64_t x, std::uint64_t rev_y, int len) {
  std::int64_t total = 0;
  for (int m = 0; m <= 2 * len - 2; ++m) {
    const std::int64_t c = cross_corr(rev_y, x, len, len - 1 - m);
    total += c * c;
  }
  return total;
}

inline std::int64_t conv_norm_sq(std::uint64_t x, std::uint64_t y, int len) {
  return conv_norm_sq_from_rev(x, reverse(y, len), len);
}

}  // namespace rsl::bits
