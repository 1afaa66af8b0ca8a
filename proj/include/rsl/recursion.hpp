#pragma once

#include <span>
#include <vector>

#include "rsl/poly.hpp"

namespace rsl {

// Exact stems above this depth would need gigabyte-scale coefficient lists;
// the closed forms in asymptotics.hpp cover deeper behaviour.
inline constexpr int kMaxStemDepth = 20;

template <typename C>
void check_seed(const LaurentPoly<C>& f, const char* what) {
  if (f.is_zero()) throw BadSeed(std::string(what) + ": zero seed");
  if (f.min_exp() != 0)
    throw BadSeed(std::string(what) + ": seed needs a nonzero constant coefficient");
}

// One step of the doubling recursion: f(z) + sign * z^len(f) * f^dag(-z).
// The result has twice the length of f and keeps its constant coefficient.
template <typename C>
LaurentPoly<C> step(const LaurentPoly<C>& f, int sign) {
  check_seed(f, "step");
  if (sign != 1 && sign != -1) throw Error("step: sign must be +-1");
  LaurentPoly<C> tail = alternate(conj_reciprocal(f)).shifted(f.length());
  if (sign < 0) tail = -tail;
  return f + tail;
}

// Seed plus the per-step signs that drive the recursion.
template <typename C>
struct StemSpec {
  LaurentPoly<C> seed;
  std::vector<int> signs;
};

// f_0 .. f_depth.  Signs shorter than the requested depth are an error, not
// cycled.
template <typename C>
std::vector<LaurentPoly<C>> stem(const StemSpec<C>& spec, int depth) {
  check_seed(spec.seed, "stem");
  if (depth < 0) throw Error("stem: negative depth");
  if (depth > kMaxStemDepth)
    throw Error("stem: depth " + std::to_string(depth) + " exceeds cap " +
                std::to_string(kMaxStemDepth));
  if (static_cast<size_t>(depth) > spec.signs.size())
    throw DepthExceedsSigns("stem: " + std::to_string(depth) + " steps requested, only " +
                            std::to_string(spec.signs.size()) + " signs given");
  std::vector<LaurentPoly<C>> out;
  out.reserve(static_cast<size_t>(depth) + 1);
  out.push_back(spec.seed);
  for (int n = 0; n < depth; ++n)
    out.push_back(step(out.back(), spec.signs[static_cast<size_t>(n)]));
  return out;
}

}  // namespace rsl
