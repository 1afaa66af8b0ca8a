#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <utility>

namespace rsl {

using BigInt = boost::multiprecision::cpp_int;

// Gaussian integer a + bi with arbitrary-precision parts.
struct GaussInt {
  BigInt re;
  BigInt im;

  GaussInt() = default;
  GaussInt(BigInt r) : re(std::move(r)) {}
  GaussInt(BigInt r, BigInt i) : re(std::move(r)), im(std::move(i)) {}
  GaussInt(int r) : re(r) {}
  GaussInt(int r, int i) : re(r), im(i) {}

  friend GaussInt operator+(const GaussInt& a, const GaussInt& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussInt operator-(const GaussInt& a, const GaussInt& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussInt operator*(const GaussInt& a, const GaussInt& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  GaussInt operator-() const { return {-re, -im}; }
  GaussInt& operator+=(const GaussInt& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  friend bool operator==(const GaussInt& a, const GaussInt& b) = default;
};

inline bool is_zero(const BigInt& x) { return x.is_zero(); }
inline bool is_zero(const GaussInt& x) { return x.re.is_zero() && x.im.is_zero(); }

inline BigInt conj(const BigInt& x) { return x; }
inline GaussInt conj(const GaussInt& x) { return {x.re, -x.im}; }

// |x|^2, always a plain integer.
inline BigInt abs_sq(const BigInt& x) { return x * x; }
inline BigInt abs_sq(const GaussInt& x) { return x.re * x.re + x.im * x.im; }

inline const BigInt& real_part(const BigInt& x) { return x; }
inline const BigInt& real_part(const GaussInt& x) { return x.re; }

inline std::string to_string(const BigInt& x) { return x.str(); }
inline std::string to_string(const GaussInt& x) {
  if (x.im.is_zero()) return x.re.str();
  std::string s = x.re.is_zero() ? std::string() : x.re.str();
  if (!s.empty() && x.im.sign() > 0) s += "+";
  if (x.im == 1) {
    s += "i";
  } else if (x.im == -1) {
    s += "-i";
  } else {
    s += x.im.str() + "i";
  }
  return s;
}

}  // namespace rsl
