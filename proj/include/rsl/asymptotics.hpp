#pragma once

#include <span>
#include <utility>
#include <vector>

#include "rsl/correlation.hpp"
#include "rsl/poly.hpp"
#include "rsl/rational.hpp"
#include "rsl/recursion.hpp"

namespace rsl {

// State driving the one-step demerit-factor transition for a seed pair:
//   u = ||f g||_2^2,  v = ||f g~||_2^2,  w = Re int f f~ conj(g g~).
struct UvwState {
  BigInt u;
  BigInt v;
  BigInt w;
  friend bool operator==(const UvwState&, const UvwState&) = default;
};

template <typename C>
UvwState uvw_of(const LaurentPoly<C>& f, const LaurentPoly<C>& g) {
  check_seed(f, "uvw_of");
  check_seed(g, "uvw_of");
  if (f.length() != g.length()) throw LengthMismatch("uvw_of: lengths differ");
  UvwState s;
  s.u = norm2_sq(mul(f, g));
  s.v = norm2_sq(mul(f, alternate(g)));
  s.w = real_part(integral(
      mul(mul(f, alternate(f)), laurent_conj(mul(g, alternate(g))))));
  return s;
}

// One recursion step; sign_product is the product of the two per-step signs.
inline UvwState uvw_step(const UvwState& s, int sign_product) {
  if (sign_product != 1 && sign_product != -1)
    throw Error("uvw_step: sign product must be +-1");
  const BigInt e = sign_product;
  return {2 * s.u + 2 * s.v + 2 * e * s.w,
          2 * s.u + 2 * s.v - 2 * e * s.w,
          2 * e * s.u - 2 * e * s.v + 2 * s.w};
}

// Exact CDF(f_n, g_n) for stems grown from f0, g0.  With every sign product
// +1 this is the closed form
//   [(2u+v+w) + (-1/2)^n (u-v-w)] / (3 ||f0||_2^2 ||g0||_2^2);
// mixed sign products fall back to iterating the transition.
template <typename C>
BigRational finite_cdf_closed_form(const LaurentPoly<C>& f0, const LaurentPoly<C>& g0,
                                   int depth, std::span<const int> sign_products = {}) {
  if (depth < 0) throw Error("finite_cdf_closed_form: negative depth");
  if (!sign_products.empty() && sign_products.size() < static_cast<size_t>(depth))
    throw DepthExceedsSigns("finite_cdf_closed_form: fewer sign products than steps");
  UvwState s = uvw_of(f0, g0);
  const BigInt d2 = norm2_sq(f0) * norm2_sq(g0);

  bool all_plus = true;
  for (int i = 0; i < depth && all_plus; ++i)
    all_plus = sign_products.empty() || sign_products[static_cast<size_t>(i)] == 1;

  if (all_plus) {
    const BigInt pow2 = BigInt(1) << depth;
    const BigInt stable = 2 * s.u + s.v + s.w;
    const BigInt decay = s.u - s.v - s.w;
    const BigInt num = pow2 * stable + (depth % 2 == 0 ? decay : -decay);
    return {num, 3 * pow2 * d2};
  }
  for (int i = 0; i < depth; ++i) s = uvw_step(s, sign_products[static_cast<size_t>(i)]);
  return {s.u, (BigInt(1) << (2 * depth)) * d2};
}

// Limit of ADF(f_n): -1 + (2/3)(||f0||_4^4 + ||f0 f0~||_2^2) / ||f0||_2^4.
// Always >= 1/3.
template <typename C>
BigRational limiting_adf(const LaurentPoly<C>& f0) {
  check_seed(f0, "limiting_adf");
  const BigInt a = norm4_4(f0);
  const BigInt b = norm2_sq(mul(f0, alternate(f0)));
  const BigInt l2 = norm2_sq(f0);
  return {2 * (a + b) - 3 * l2 * l2, 3 * l2 * l2};
}

// Limit of CDF(f_n, g_n): (2u + v + w) / (3 ||f0||_2^2 ||g0||_2^2).
template <typename C>
BigRational limiting_cdf(const LaurentPoly<C>& f0, const LaurentPoly<C>& g0) {
  UvwState s = uvw_of(f0, g0);
  return {2 * s.u + s.v + s.w, 3 * norm2_sq(f0) * norm2_sq(g0)};
}

template <typename C>
ExactPsc limiting_psc(const LaurentPoly<C>& f0, const LaurentPoly<C>& g0) {
  return make_psc(limiting_adf(f0), limiting_adf(g0), limiting_cdf(f0, g0));
}

// Limiting ADF/CDF/PSC of the stems grown from a seed pair.
struct LimitReport {
  BigRational adf_f;
  BigRational adf_g;
  BigRational cdf;
  ExactPsc psc;
};

template <typename C>
LimitReport limit_report(const LaurentPoly<C>& f0, const LaurentPoly<C>& g0) {
  LimitReport r;
  r.adf_f = limiting_adf(f0);
  r.adf_g = limiting_adf(g0);
  r.cdf = limiting_cdf(f0, g0);
  r.psc = make_psc(r.adf_f, r.adf_g, r.cdf);
  return r;
}

template <typename C>
LimitReport limit_report(const LaurentPoly<C>& f0) {
  return limit_report(f0, f0);
}

// ||f_n||_4^4 / ||f_n||_2^4 for a Littlewood seed grown with all-plus signs,
// in closed form:
//   (2/3)(a + b)/l^2 + (-1/2)^n (1/3)(a - 2b)/l^2,
// with a = ||f0||_4^4, b = ||f0 f0~||_2^2, l = len f0.
inline BigRational bm_ratio(const IntPoly& f0, int n) {
  if (!is_littlewood(f0)) throw NotLittlewood("bm_ratio: seed is not Littlewood");
  if (n < 0) throw Error("bm_ratio: negative depth");
  const BigInt a = norm4_4(f0);
  const BigInt b = norm2_sq(mul(f0, alternate(f0)));
  const BigInt l2 = norm2_sq(f0) * norm2_sq(f0);
  const BigInt pow2 = BigInt(1) << n;
  const BigInt swing = a - 2 * b;
  return {2 * pow2 * (a + b) + (n % 2 == 0 ? swing : -swing), 3 * pow2 * l2};
}

// Seed family with limiting CDF 1/(3k): the all-ones sequence of length 4k
// paired with k repetitions of (1, -1, -1, 1).  Both seeds share the
// limiting ADF (16k^2 - 9k + 2)/(9k).
inline std::pair<IntPoly, IntPoly> low_cdf_pair(int k) {
  if (k < 1) throw Error("low_cdf_pair: k must be positive");
  std::vector<int> f(static_cast<size_t>(4 * k), 1);
  std::vector<int> g;
  g.reserve(static_cast<size_t>(4 * k));
  for (int i = 0; i < k; ++i) {
    g.push_back(1);
    g.push_back(-1);
    g.push_back(-1);
    g.push_back(1);
  }
  return {poly_from_signs(f), poly_from_signs(g)};
}

inline BigRational low_cdf_pair_cdf_limit(int k) {
  if (k < 1) throw Error("low_cdf_pair_cdf_limit: k must be positive");
  return {1, 3 * BigInt(k)};
}

inline BigRational low_cdf_pair_adf_limit(int k) {
  if (k < 1) throw Error("low_cdf_pair_adf_limit: k must be positive");
  const BigInt kk(k);
  return {16 * kk * kk - 9 * kk + 2, 9 * kk};
}

}  // namespace rsl
