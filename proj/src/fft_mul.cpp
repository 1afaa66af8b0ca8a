#include "rsl/fft_mul.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <mutex>
#include <vector>

namespace rsl {

namespace {

// FFTW planning is not thread-safe; execution of a private plan is.
std::mutex& plan_mutex() {
  static std::mutex m;
  return m;
}

BigInt max_abs_coeff(const IntPoly& p) {
  BigInt m = 0;
  for (const auto& c : p.coeffs()) {
    BigInt a = c.sign() < 0 ? BigInt(-c) : c;
    if (a > m) m = a;
  }
  return m;
}

void fft_inplace(std::vector<std::complex<double>>& buf, int direction) {
  fftw_plan plan;
  {
    std::lock_guard<std::mutex> lock(plan_mutex());
    plan = fftw_plan_dft_1d(static_cast<int>(buf.size()),
                            reinterpret_cast<fftw_complex*>(buf.data()),
                            reinterpret_cast<fftw_complex*>(buf.data()), direction,
                            FFTW_ESTIMATE);
  }
  fftw_execute(plan);
  {
    std::lock_guard<std::mutex> lock(plan_mutex());
    fftw_destroy_plan(plan);
  }
}

}  // namespace

IntPoly mul_fast(const IntPoly& a, const IntPoly& b, double* max_deviation) {
  if (max_deviation) *max_deviation = 0.0;
  if (a.is_zero() || b.is_zero()) return IntPoly::zero();

  const auto ca = a.coeffs();
  const auto cb = b.coeffs();
  const size_t n = ca.size() + cb.size() - 1;

  // Every output coefficient is bounded by min(|a|,|b|)*max|a_i|*max|b_j|;
  // rounding is only trustworthy while that bound stays below 2^52.
  const BigInt bound =
      BigInt(std::min(ca.size(), cb.size())) * max_abs_coeff(a) * max_abs_coeff(b);
  if (bound >= (BigInt(1) << 52))
    throw RoundingUnsafe("mul_fast: coefficient bound too large for float convolution");

  size_t fft_size = 1;
  while (fft_size < n) fft_size <<= 1;

  std::vector<std::complex<double>> fa(fft_size), fb(fft_size);
  for (size_t i = 0; i < ca.size(); ++i) fa[i] = ca[i].convert_to<double>();
  for (size_t i = 0; i < cb.size(); ++i) fb[i] = cb[i].convert_to<double>();

  fft_inplace(fa, FFTW_FORWARD);
  fft_inplace(fb, FFTW_FORWARD);
  for (size_t i = 0; i < fft_size; ++i) fa[i] *= fb[i];
  fft_inplace(fa, FFTW_BACKWARD);

  const double scale = 1.0 / static_cast<double>(fft_size);
  std::vector<BigInt> out(n);
  double worst = 0.0;
  for (size_t i = 0; i < n; ++i) {
    const double re = fa[i].real() * scale;
    const double im = fa[i].imag() * scale;
    const double rounded = std::nearbyint(re);
    worst = std::max({worst, std::abs(re - rounded), std::abs(im)});
    out[i] = BigInt(static_cast<long long>(rounded));
  }
  if (max_deviation) *max_deviation = worst;
  if (worst >= kFftDeviationGuard)
    throw RoundingUnsafe("mul_fast: pre-rounding deviation " + std::to_string(worst) +
                         " exceeds guard");
  return IntPoly(std::move(out), a.offset() + b.offset());
}

IntPoly mul_auto(const IntPoly& a, const IntPoly& b) {
  try {
    return mul_fast(a, b);
  } catch (const RoundingUnsafe&) {
    return mul(a, b);
  }
}

}  // namespace rsl
