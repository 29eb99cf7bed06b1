// NEON variant: two evaluation points per register. vmulq/vaddq are used
// separately (never vfmaq) to stay bit-identical with the scalar kernel.

#include "normpow/simd.hpp"

#include <cstddef>

#if defined(__aarch64__)
#include <arm_neon.h>
#endif

namespace normpow::simd::neon {

#if defined(__aarch64__)

void horner(std::span<const double> coeffs, std::span<const double> x, std::span<double> out) {
  const std::size_t n = coeffs.size();
  const std::size_t m = x.size();
  if (n == 0) {
    for (std::size_t i = 0; i < m; ++i) out[i] = 0.0;
    return;
  }
  std::size_t i = 0;
  for (; i + 2 <= m; i += 2) {
    const float64x2_t xv = vld1q_f64(x.data() + i);
    float64x2_t acc = vdupq_n_f64(coeffs[n - 1]);
    for (std::size_t k = n - 1; k-- > 0;) {
      acc = vaddq_f64(vmulq_f64(acc, xv), vdupq_n_f64(coeffs[k]));
    }
    vst1q_f64(out.data() + i, acc);
  }
  if (i < m) scalar::horner(coeffs, x.subspan(i), out.subspan(i));
}

void horner_with_derivative(std::span<const double> coeffs, std::span<const double> x,
                            std::span<double> value, std::span<double> deriv) {
  const std::size_t n = coeffs.size();
  const std::size_t m = x.size();
  if (n == 0) {
    for (std::size_t i = 0; i < m; ++i) value[i] = deriv[i] = 0.0;
    return;
  }
  std::size_t i = 0;
  for (; i + 2 <= m; i += 2) {
    const float64x2_t xv = vld1q_f64(x.data() + i);
    float64x2_t acc = vdupq_n_f64(coeffs[n - 1]);
    float64x2_t d = vdupq_n_f64(0.0);
    for (std::size_t k = n - 1; k-- > 0;) {
      d = vaddq_f64(vmulq_f64(d, xv), acc);
      acc = vaddq_f64(vmulq_f64(acc, xv), vdupq_n_f64(coeffs[k]));
    }
    vst1q_f64(value.data() + i, acc);
    vst1q_f64(deriv.data() + i, d);
  }
  if (i < m) {
    scalar::horner_with_derivative(coeffs, x.subspan(i), value.subspan(i), deriv.subspan(i));
  }
}

#else

void horner(std::span<const double> coeffs, std::span<const double> x, std::span<double> out) {
  scalar::horner(coeffs, x, out);
}

void horner_with_derivative(std::span<const double> coeffs, std::span<const double> x,
                            std::span<double> value, std::span<double> deriv) {
  scalar::horner_with_derivative(coeffs, x, value, deriv);
}

#endif

}  // namespace normpow::simd::neon
