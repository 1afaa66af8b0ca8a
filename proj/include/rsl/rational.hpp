#pragma once

#include <cstdint>
#include <string>

#include "rsl/bigint.hpp"
#include "rsl/errors.hpp"

namespace rsl {

// Exact rational number.  Always stored reduced with a positive denominator,
// so equality is fieldwise.
class BigRational {
 public:
  BigRational() : num_(0), den_(1) {}
  BigRational(BigInt n) : num_(std::move(n)), den_(1) {}
  BigRational(long long n) : num_(n), den_(1) {}
  BigRational(int n) : num_(n), den_(1) {}
  BigRational(BigInt n, BigInt d);

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  int sign() const { return num_.sign(); }

  BigRational operator-() const;
  friend BigRational operator+(const BigRational& a, const BigRational& b);
  friend BigRational operator-(const BigRational& a, const BigRational& b);
  friend BigRational operator*(const BigRational& a, const BigRational& b);
  friend BigRational operator/(const BigRational& a, const BigRational& b);

  friend bool operator==(const BigRational& a, const BigRational& b) = default;
  friend bool operator<(const BigRational& a, const BigRational& b) {
    return a.num_ * b.den_ < b.num_ * a.den_;
  }
  friend bool operator<=(const BigRational& a, const BigRational& b) {
    return a.num_ * b.den_ <= b.num_ * a.den_;
  }
  friend bool operator>(const BigRational& a, const BigRational& b) { return b < a; }
  friend bool operator>=(const BigRational& a, const BigRational& b) { return b <= a; }

  BigRational reciprocal() const;
  double to_double() const;

  // "p/q", or just "p" for integers.
  std::string str() const;
  // Decimal rendering, correctly rounded to `significant` significant digits.
  // Terminating decimals are printed without trailing zero padding.
  std::string decimal(int significant = 10) const;

  // Parses the output of str().  Throws Error on malformed input.
  static BigRational parse(const std::string& s);

 private:
  BigInt num_;
  BigInt den_;
  void reduce();
};

// Exact sign of (sqrt(a1) + c1) - (sqrt(a2) + c2), for a1, a2 >= 0.
// Used to order Pursley-Sarwate values without floating point.
int compare_sqrt_plus(const BigRational& a1, const BigRational& c1,
                      const BigRational& a2, const BigRational& c2);

// Same comparison for integer-scaled operands: sign of
// (sqrt(a1) + c1) - (sqrt(a2) + c2) with a1, a2 >= 0.
int compare_sqrt_plus_int(std::int64_t a1, std::int64_t c1, std::int64_t a2,
                          std::int64_t c2);

}  // namespace rsl
