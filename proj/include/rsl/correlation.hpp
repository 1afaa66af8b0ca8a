#pragma once

#include <cmath>
#include <optional>
#include <vector>

#include "rsl/poly.hpp"
#include "rsl/rational.hpp"

namespace rsl {

// Aperiodic crosscorrelation values C_{f,g}(s) for every shift, stored
// densely over -(len g - 1) .. (len f - 1).
template <typename C>
struct CorrelationProfile {
  std::int64_t min_shift = 0;
  std::vector<C> values;

  std::int64_t max_shift() const {
    return min_shift + static_cast<std::int64_t>(values.size()) - 1;
  }
  C at(std::int64_t s) const {
    if (s < min_shift || s > max_shift()) return C(0);
    return values[static_cast<size_t>(s - min_shift)];
  }
};

template <typename C>
CorrelationProfile<C> crosscorrelation(const LaurentPoly<C>& f, const LaurentPoly<C>& g) {
  if (f.is_zero() || g.is_zero()) throw ZeroSequence("crosscorrelation: zero sequence");
  if (f.min_exp() != 0 || g.min_exp() != 0)
    throw NotAPolynomial("crosscorrelation: inputs must have offset 0");
  const LaurentPoly<C> prod = mul(f, laurent_conj(g));
  CorrelationProfile<C> p;
  p.min_shift = -(g.length() - 1);
  p.values.assign(static_cast<size_t>(f.length() + g.length() - 1), C(0));
  for (std::int64_t e = prod.min_exp(); e <= prod.max_exp(); ++e)
    p.values[static_cast<size_t>(e - p.min_shift)] = prod.coeff(e);
  return p;
}

namespace detail {
template <typename C>
void check_pair(const LaurentPoly<C>& f, const LaurentPoly<C>& g, const char* what) {
  if (f.is_zero() || g.is_zero()) throw ZeroSequence(std::string(what) + ": zero sequence");
  if (f.min_exp() != 0 || g.min_exp() != 0)
    throw NotAPolynomial(std::string(what) + ": inputs must have offset 0");
  if (f.length() != g.length())
    throw LengthMismatch(std::string(what) + ": lengths differ");
}
}  // namespace detail

// Crosscorrelation demerit factor: total squared correlation magnitude over
// the product of the squared 2-norms.  Exact.
template <typename C>
BigRational cdf(const LaurentPoly<C>& f, const LaurentPoly<C>& g) {
  detail::check_pair(f, g, "cdf");
  return {norm2_sq(mul(f, laurent_conj(g))), norm2_sq(f) * norm2_sq(g)};
}

// Autocorrelation demerit factor: cdf(f, f) - 1 >= 0.
template <typename C>
BigRational adf(const LaurentPoly<C>& f) {
  return cdf(f, f) - BigRational(1);
}

template <typename C>
BigRational amf(const LaurentPoly<C>& f) {
  BigRational d = adf(f);
  if (d.is_zero()) throw ZeroDemeritFactor("amf: autocorrelation demerit factor is zero");
  return d.reciprocal();
}

template <typename C>
BigRational cmf(const LaurentPoly<C>& f, const LaurentPoly<C>& g) {
  BigRational d = cdf(f, g);
  if (d.is_zero()) throw ZeroDemeritFactor("cmf: crosscorrelation demerit factor is zero");
  return d.reciprocal();
}

// Pursley-Sarwate criterion sqrt(ADF(f) ADF(g)) + CDF(f,g), carried as exact
// components; the combined value is exact whenever the two ADFs coincide.
struct ExactPsc {
  BigRational adf_f;
  BigRational adf_g;
  BigRational cdf;
  double psc_float = 0.0;
  std::optional<BigRational> psc_exact;
};

inline ExactPsc make_psc(BigRational adf_f, BigRational adf_g, BigRational c) {
  ExactPsc p;
  p.psc_float = std::sqrt(adf_f.to_double() * adf_g.to_double()) + c.to_double();
  if (adf_f == adf_g) p.psc_exact = adf_f + c;
  p.adf_f = std::move(adf_f);
  p.adf_g = std::move(adf_g);
  p.cdf = std::move(c);
  return p;
}

template <typename C>
ExactPsc psc(const LaurentPoly<C>& f, const LaurentPoly<C>& g) {
  detail::check_pair(f, g, "psc");
  return make_psc(adf(f), adf(g), cdf(f, g));
}

// Exact ordering of two PSC values given as (ADF product, CDF) components.
inline int compare_psc(const ExactPsc& a, const ExactPsc& b) {
  return compare_sqrt_plus(a.adf_f * a.adf_g, a.cdf, b.adf_f * b.adf_g, b.cdf);
}

}  // namespace rsl
