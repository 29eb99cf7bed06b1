#include "normpow/real_poly.hpp"

#include "normpow/polyfamily.hpp"
#include "normpow/simd.hpp"

#include <cmath>

namespace normpow {

RealPoly RealPoly::member(int p, double q) { return RealPoly(specialize_member(p, q)); }

double RealPoly::operator()(double x) const {
  if (coeffs_.empty()) return 0.0;
  double acc = coeffs_.back();
  for (std::size_t k = coeffs_.size() - 1; k-- > 0;) acc = acc * x + coeffs_[k];
  return acc;
}

void RealPoly::evaluate(std::span<const double> x, std::span<double> out) const {
  simd::horner(coeffs_, x, out);
}

std::vector<double> RealPoly::evaluate(std::span<const double> x) const {
  std::vector<double> out(x.size());
  simd::horner(coeffs_, x, out);
  return out;
}

void RealPoly::evaluate_with_derivative(std::span<const double> x, std::span<double> value,
                                        std::span<double> deriv) const {
  simd::horner_with_derivative(coeffs_, x, value, deriv);
}

RealPoly RealPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<double> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = static_cast<double>(k) * coeffs_[k];
  return RealPoly(std::move(d));
}

RealPoly RealPoly::divided_difference(double root) const {
  if (coeffs_.size() <= 1) return {};
  const std::size_t n = coeffs_.size() - 1;
  std::vector<double> b(n);
  b[n - 1] = coeffs_[n];
  for (std::size_t j = n - 1; j-- > 0;) b[j] = coeffs_[j + 1] + root * b[j + 1];
  return RealPoly(std::move(b));
}

double RealPoly::magnitude(double x) const {
  const double ax = std::abs(x);
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * ax + std::abs(*it);
  return acc;
}

}  // namespace normpow
