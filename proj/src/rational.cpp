#include "rsl/rational.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <utility>

namespace rsl {

namespace {
BigInt big_abs(const BigInt& x) { return x.sign() < 0 ? BigInt(-x) : x; }
}  // namespace

BigRational::BigRational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {
  reduce();
}

void BigRational::reduce() {
  if (den_.is_zero()) throw Error("BigRational: zero denominator");
  if (den_.sign() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_.is_zero()) {
    den_ = 1;
    return;
  }
  BigInt g = boost::multiprecision::gcd(big_abs(num_), den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

BigRational BigRational::operator-() const {
  BigRational r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

BigRational operator+(const BigRational& a, const BigRational& b) {
  return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

BigRational operator-(const BigRational& a, const BigRational& b) {
  return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
}

BigRational operator*(const BigRational& a, const BigRational& b) {
  return {a.num_ * b.num_, a.den_ * b.den_};
}

BigRational operator/(const BigRational& a, const BigRational& b) {
  if (b.is_zero()) throw Error("BigRational: division by zero");
  return {a.num_ * b.den_, a.den_ * b.num_};
}

BigRational BigRational::reciprocal() const {
  if (is_zero()) throw Error("BigRational: reciprocal of zero");
  return {den_, num_};
}

double BigRational::to_double() const {
  return num_.convert_to<double>() / den_.convert_to<double>();
}

std::string BigRational::str() const {
  if (den_ == 1) return num_.str();
  return num_.str() + "/" + den_.str();
}

std::string BigRational::decimal(int significant) const {
  if (significant < 1) significant = 1;
  if (num_.is_zero()) return "0";

  const bool neg = num_.sign() < 0;
  BigInt n = big_abs(num_);
  const BigInt& d = den_;
  BigInt ip = n / d;
  BigInt rem = n % d;

  // Collect significant digits plus one rounding digit; track the power-of-ten
  // exponent so the value is 0.{digits} * 10^exp.
  std::string digits;
  long exp = 0;
  if (!ip.is_zero()) {
    digits = ip.str();
    exp = static_cast<long>(digits.size());
  } else {
    while (!rem.is_zero()) {
      rem *= 10;
      BigInt q = rem / d;
      rem %= d;
      if (q.is_zero()) {
        --exp;
      } else {
        digits.push_back(static_cast<char>('0' + q.convert_to<int>()));
        break;
      }
    }
  }
  while (static_cast<int>(digits.size()) < significant + 1 && !rem.is_zero()) {
    rem *= 10;
    BigInt q = rem / d;
    rem %= d;
    digits.push_back(static_cast<char>('0' + q.convert_to<int>()));
  }

  if (static_cast<int>(digits.size()) > significant) {
    char extra = digits[significant];
    digits.resize(significant);
    if (extra >= '5') {
      int i = significant - 1;
      while (i >= 0 && digits[i] == '9') digits[i--] = '0';
      if (i < 0) {
        digits.insert(digits.begin(), '1');
        digits.resize(significant);
        ++exp;
      } else {
        ++digits[i];
      }
    }
  }

  std::string out;
  if (neg) out += '-';
  const long nd = static_cast<long>(digits.size());
  if (exp <= 0) {
    out += "0.";
    out.append(static_cast<size_t>(-exp), '0');
    out += digits;
  } else if (exp >= nd) {
    out += digits;
    out.append(static_cast<size_t>(exp - nd), '0');
  } else {
    out += digits.substr(0, static_cast<size_t>(exp));
    out += '.';
    out += digits.substr(static_cast<size_t>(exp));
  }
  return out;
}

BigRational BigRational::parse(const std::string& s) {
  try {
    auto slash = s.find('/');
    if (slash == std::string::npos) return BigRational(BigInt(s));
    return {BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1))};
  } catch (const std::exception&) {
    throw Error("BigRational: cannot parse \"" + s + "\"");
  }
}

int compare_sqrt_plus(const BigRational& a1, const BigRational& c1,
                      const BigRational& a2, const BigRational& c2) {
  if (a1.sign() < 0 || a2.sign() < 0) throw Error("compare_sqrt_plus: negative radicand");
  BigRational d = c1 - c2;
  if (a1 == a2) return d.sign();
  if (d.is_zero()) return a1 < a2 ? -1 : 1;
  const int s = a1 < a2 ? -1 : 1;  // sign of sqrt(a1) - sqrt(a2)
  if (s == d.sign()) return s;

  // Opposite signs: decide sqrt(big) vs sqrt(small) + |d| by squaring twice.
  const BigRational& big = s > 0 ? a1 : a2;
  const BigRational& small = s > 0 ? a2 : a1;
  const int flip = s;
  BigRational t = big - small - d * d;
  if (t.sign() < 0) return -flip;
  if (t.is_zero()) return small.is_zero() ? 0 : -flip;
  BigRational lhs = t * t;
  BigRational rhs = BigRational(4) * d * d * small;
  if (lhs == rhs) return 0;
  return lhs < rhs ? -flip : flip;
}

int compare_sqrt_plus_int(std::int64_t a1, std::int64_t c1, std::int64_t a2,
                          std::int64_t c2) {
  using I = __int128;
  if (a1 < 0 || a2 < 0) throw Error("compare_sqrt_plus_int: negative radicand");
  const std::int64_t d = c1 - c2;
  if (a1 == a2) return d > 0 ? 1 : d < 0 ? -1 : 0;
  if (d == 0) return a1 < a2 ? -1 : 1;
  const int s = a1 < a2 ? -1 : 1;
  const int ds = d > 0 ? 1 : -1;
  if (s == ds) return s;

  const std::int64_t big = s > 0 ? a1 : a2;
  const std::int64_t small = s > 0 ? a2 : a1;
  const int flip = s;
  const I t = static_cast<I>(big) - small - static_cast<I>(d) * d;
  if (t < 0) return -flip;
  if (t == 0) return small == 0 ? 0 : -flip;
  const I lhs = t * t;
  const I rhs = static_cast<I>(4) * d * d * small;
  if (lhs == rhs) return 0;
  return lhs < rhs ? -flip : flip;
}

}  // namespace rsl
