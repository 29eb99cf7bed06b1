// AVX2 variant: four evaluation points per register. Built with -mavx2 only;
// callers reach it through the dispatcher after a CPUID check.

#include "normpow/simd.hpp"

#include <cstddef>

#if defined(__AVX2__)
#include <immintrin.h>
#endif

namespace normpow::simd::avx2 {

#if defined(__AVX2__)

void horner(std::span<const double> coeffs, std::span<const double> x, std::span<double> out) {
  const std::size_t n = coeffs.size();
  const std::size_t m = x.size();
  if (n == 0) {
    for (std::size_t i = 0; i < m; ++i) out[i] = 0.0;
    return;
  }
  std::size_t i = 0;
  for (; i + 4 <= m; i += 4) {
    const __m256d xv = _mm256_loadu_pd(x.data() + i);
    __m256d acc = _mm256_set1_pd(coeffs[n - 1]);
    for (std::size_t k = n - 1; k-- > 0;) {
      acc = _mm256_add_pd(_mm256_mul_pd(acc, xv), _mm256_set1_pd(coeffs[k]));
    }
    _mm256_storeu_pd(out.data() + i, acc);
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
  for (; i + 4 <= m; i += 4) {
    const __m256d xv = _mm256_loadu_pd(x.data() + i);
    __m256d acc = _mm256_set1_pd(coeffs[n - 1]);
    __m256d d = _mm256_setzero_pd();
    for (std::size_t k = n - 1; k-- > 0;) {
      d = _mm256_add_pd(_mm256_mul_pd(d, xv), acc);
      acc = _mm256_add_pd(_mm256_mul_pd(acc, xv), _mm256_set1_pd(coeffs[k]));
    }
    _mm256_storeu_pd(value.data() + i, acc);
    _mm256_storeu_pd(deriv.data() + i, d);
  }
  if (i < m) {
    scalar::horner_with_derivative(coeffs, x.subspan(i), value.subspan(i), deriv.subspan(i));
  }
}

#else

// Not an x86 build: the dispatcher never selects these.
void horner(std::span<const double> coeffs, std::span<const double> x, std::span<double> out) {
  scalar::horner(coeffs, x, out);
}

void horner_with_derivative(std::span<const double> coeffs, std::span<const double> x,
                            std::span<double> value, std::span<double> deriv) {
  scalar::horner_with_derivative(coeffs, x, value, deriv);
}

#endif

}  // namespace normpow::simd::avx2
