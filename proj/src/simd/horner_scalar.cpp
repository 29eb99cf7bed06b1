#include "normpow/simd.hpp"

#include <cstddef>

namespace normpow::simd::scalar {

void horner(std::span<const double> coeffs, std::span<const double> x, std::span<double> out) {
  const std::size_t n = coeffs.size();
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (n == 0) {
      out[i] = 0.0;
      continue;
    }
    const double xi = x[i];
    double acc = coeffs[n - 1];
    for (std::size_t k = n - 1; k-- > 0;) acc = acc * xi + coeffs[k];
    out[i] = acc;
  }
}

void horner_with_derivative(std::span<const double> coeffs, std::span<const double> x,
                            std::span<double> value, std::span<double> deriv) {
  const std::size_t n = coeffs.size();
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (n == 0) {
      value[i] = 0.0;
      deriv[i] = 0.0;
      continue;
    }
    const double xi = x[i];
    double acc = coeffs[n - 1];
    double d = 0.0;
    for (std::size_t k = n - 1; k-- > 0;) {
      d = d * xi + acc;
      acc = acc * xi + coeffs[k];
    }
    value[i] = acc;
    deriv[i] = d;
  }
}

}  // namespace normpow::simd::scalar
