#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rsl/bigint.hpp"
#include "rsl/errors.hpp"

namespace rsl {

// Laurent polynomial with exact coefficients (BigInt or GaussInt).  The
// coefficient list is canonically trimmed: first and last stored coefficients
// are nonzero, and the zero polynomial stores an empty list with offset 0.
// Values are immutable after construction.
template <typename C>
class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(std::vector<C> coeffs, std::int64_t offset = 0)
      : coeffs_(std::move(coeffs)), offset_(offset) {
    trim();
  }

  static LaurentPoly zero() { return {}; }
  static LaurentPoly monomial(C c, std::int64_t e) {
    return LaurentPoly(std::vector<C>{std::move(c)}, e);
  }

  bool is_zero() const { return coeffs_.empty(); }
  std::int64_t min_exp() const { return offset_; }
  std::int64_t max_exp() const {
    return offset_ + static_cast<std::int64_t>(coeffs_.size()) - 1;
  }
  // Length of an ordinary polynomial (1 + degree).  Zero polynomial has
  // length 0; Laurent polynomials with negative exponents are rejected.
  std::int64_t length() const {
    if (is_zero()) return 0;
    if (offset_ < 0) throw NotAPolynomial("length: negative exponents present");
    return max_exp() + 1;
  }
  bool is_polynomial() const { return is_zero() || offset_ >= 0; }

  std::span<const C> coeffs() const { return coeffs_; }
  std::int64_t offset() const { return offset_; }
  C coeff(std::int64_t e) const {
    if (is_zero() || e < offset_ || e > max_exp()) return C(0);
    return coeffs_[static_cast<size_t>(e - offset_)];
  }

  LaurentPoly shifted(std::int64_t k) const {
    LaurentPoly r = *this;
    if (!r.is_zero()) r.offset_ += k;
    return r;
  }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) = default;

 private:
  std::vector<C> coeffs_;
  std::int64_t offset_ = 0;

  void trim() {
    size_t lo = 0, hi = coeffs_.size();
    while (lo < hi && rsl::is_zero(coeffs_[lo])) ++lo;
    while (hi > lo && rsl::is_zero(coeffs_[hi - 1])) --hi;
    if (lo == hi) {
      coeffs_.clear();
      offset_ = 0;
      return;
    }
    if (lo > 0 || hi < coeffs_.size()) {
      coeffs_ = std::vector<C>(coeffs_.begin() + static_cast<std::ptrdiff_t>(lo),
                               coeffs_.begin() + static_cast<std::ptrdiff_t>(hi));
      offset_ += static_cast<std::int64_t>(lo);
    }
  }
};

using IntPoly = LaurentPoly<BigInt>;
using GaussPoly = LaurentPoly<GaussInt>;

template <typename C>
LaurentPoly<C> operator+(const LaurentPoly<C>& a, const LaurentPoly<C>& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const std::int64_t lo = std::min(a.min_exp(), b.min_exp());
  const std::int64_t hi = std::max(a.max_exp(), b.max_exp());
  std::vector<C> c(static_cast<size_t>(hi - lo + 1), C(0));
  for (std::int64_t e = a.min_exp(); e <= a.max_exp(); ++e)
    c[static_cast<size_t>(e - lo)] += a.coeff(e);
  for (std::int64_t e = b.min_exp(); e <= b.max_exp(); ++e)
    c[static_cast<size_t>(e - lo)] += b.coeff(e);
  return LaurentPoly<C>(std::move(c), lo);
}

template <typename C>
LaurentPoly<C> operator-(const LaurentPoly<C>& a) {
  std::vector<C> c(a.coeffs().begin(), a.coeffs().end());
  for (auto& x : c) x = -x;
  return LaurentPoly<C>(std::move(c), a.offset());
}

template <typename C>
LaurentPoly<C> operator-(const LaurentPoly<C>& a, const LaurentPoly<C>& b) {
  return a + (-b);
}

// Exact coefficient-wise convolution.
template <typename C>
LaurentPoly<C> mul(const LaurentPoly<C>& a, const LaurentPoly<C>& b) {
  if (a.is_zero() || b.is_zero()) return LaurentPoly<C>::zero();
  const auto ca = a.coeffs();
  const auto cb = b.coeffs();
  std::vector<C> c(ca.size() + cb.size() - 1, C(0));
  for (size_t i = 0; i < ca.size(); ++i)
    for (size_t j = 0; j < cb.size(); ++j) c[i + j] += ca[i] * cb[j];
  return LaurentPoly<C>(std::move(c), a.offset() + b.offset());
}

template <typename C>
LaurentPoly<C> operator*(const LaurentPoly<C>& a, const LaurentPoly<C>& b) {
  return mul(a, b);
}

// Conjugate reciprocal: coefficients conjugated and reversed over 0..deg.
// Only defined for ordinary polynomials (no negative exponents).
template <typename C>
LaurentPoly<C> conj_reciprocal(const LaurentPoly<C>& a) {
  if (a.is_zero()) throw NotAPolynomial("conj_reciprocal: zero polynomial");
  if (a.min_exp() < 0) throw NotAPolynomial("conj_reciprocal: negative exponents present");
  const std::int64_t d = a.max_exp();
  std::vector<C> c(static_cast<size_t>(d + 1), C(0));
  for (std::int64_t e = 0; e <= d; ++e)
    c[static_cast<size_t>(d - e)] = conj(a.coeff(e));
  return LaurentPoly<C>(std::move(c), 0);
}

// a(-z): coefficient at exponent j multiplied by (-1)^j.
template <typename C>
LaurentPoly<C> alternate(const LaurentPoly<C>& a) {
  std::vector<C> c(a.coeffs().begin(), a.coeffs().end());
  for (size_t i = 0; i < c.size(); ++i) {
    const std::int64_t e = a.offset() + static_cast<std::int64_t>(i);
    if (e & 1) c[i] = -c[i];
  }
  return LaurentPoly<C>(std::move(c), a.offset());
}

// Coefficients conjugated, exponents negated (conjugation on the unit circle).
template <typename C>
LaurentPoly<C> laurent_conj(const LaurentPoly<C>& a) {
  if (a.is_zero()) return a;
  const auto ca = a.coeffs();
  std::vector<C> c(ca.size());
  for (size_t i = 0; i < ca.size(); ++i) c[ca.size() - 1 - i] = conj(ca[i]);
  return LaurentPoly<C>(std::move(c), -a.max_exp());
}

// Constant coefficient (the mean over the unit circle).
template <typename C>
C integral(const LaurentPoly<C>& a) {
  return a.coeff(0);
}

// Sum of squared coefficient magnitudes.
template <typename C>
BigInt norm2_sq(const LaurentPoly<C>& a) {
  BigInt s = 0;
  for (const auto& c : a.coeffs()) s += abs_sq(c);
  return s;
}

// Sum of squared autocorrelation magnitudes over all shifts.
template <typename C>
BigInt norm4_4(const LaurentPoly<C>& a) {
  return norm2_sq(mul(a, laurent_conj(a)));
}

inline IntPoly poly_from_signs(const std::vector<int>& signs) {
  std::vector<BigInt> c;
  c.reserve(signs.size());
  for (int s : signs) c.emplace_back(s);
  return IntPoly(std::move(c), 0);
}

template <typename C>
bool is_littlewood(const LaurentPoly<C>& a) {
  if (a.is_zero() || a.min_exp() != 0) return false;
  for (const auto& c : a.coeffs())
    if (!(c == C(1) || c == C(-1))) return false;
  return true;
}

template <typename C>
std::string to_string(const LaurentPoly<C>& a) {
  if (a.is_zero()) return "0";
  std::string out;
  for (std::int64_t e = a.min_exp(); e <= a.max_exp(); ++e) {
    C c = a.coeff(e);
    if (is_zero(c)) continue;
    std::string cs = to_string(c);
    bool negated = false;
    if (!cs.empty() && cs[0] == '-' && cs.find('+', 1) == std::string::npos &&
        cs.find('-', 1) == std::string::npos) {
      negated = true;
      cs = cs.substr(1);
    }
    if (out.empty()) {
      if (negated) out += "-";
    } else {
      out += negated ? " - " : " + ";
    }
    const bool has_z = e != 0;
    if (cs == "1" && has_z) cs.clear();
    if (cs.find('+') != std::string::npos ||
        (cs.find('-') != std::string::npos && has_z))
      cs = "(" + cs + ")";
    out += cs;
    if (has_z) {
      out += "z";
      if (e != 1) out += "^" + std::to_string(e);
    }
  }
  return out;
}

// Bit-packed +-1 sequence: bit j set means the coefficient of z^j is -1.
class LittlewoodSeq {
 public:
  LittlewoodSeq(int len, std::uint64_t bits) : len_(len), words_(1, bits) {
    if (len < 1 || len > 64) throw Error("LittlewoodSeq: word form needs 1 <= len <= 64");
    if (len < 64 && (bits >> len) != 0)
      throw Error("LittlewoodSeq: bits beyond the stated length");
  }
  explicit LittlewoodSeq(const std::vector<int>& signs) {
    if (signs.empty()) throw ZeroSequence("LittlewoodSeq: empty sequence");
    len_ = static_cast<int>(signs.size());
    words_.assign(static_cast<size_t>((len_ + 63) / 64), 0);
    for (int j = 0; j < len_; ++j) {
      if (signs[static_cast<size_t>(j)] == -1)
        words_[static_cast<size_t>(j / 64)] |= std::uint64_t(1) << (j % 64);
      else if (signs[static_cast<size_t>(j)] != 1)
        throw NotLittlewood("LittlewoodSeq: coefficients must be +-1");
    }
  }

  int length() const { return len_; }
  int sign(int j) const {
    return (words_[static_cast<size_t>(j / 64)] >> (j % 64)) & 1 ? -1 : 1;
  }
  std::uint64_t word() const {
    if (len_ > 64) throw Error("LittlewoodSeq: longer than one word");
    return words_[0];
  }
  std::vector<int> signs() const {
    std::vector<int> v(static_cast<size_t>(len_));
    for (int j = 0; j < len_; ++j) v[static_cast<size_t>(j)] = sign(j);
    return v;
  }
  IntPoly to_poly() const { return poly_from_signs(signs()); }

  friend bool operator==(const LittlewoodSeq& a, const LittlewoodSeq& b) = default;
  friend bool operator<(const LittlewoodSeq& a, const LittlewoodSeq& b) {
    if (a.len_ != b.len_) return a.len_ < b.len_;
    for (size_t i = a.words_.size(); i-- > 0;)
      if (a.words_[i] != b.words_[i]) return a.words_[i] < b.words_[i];
    return false;
  }

 private:
  int len_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace rsl
