#pragma once

#include <span>
#include <vector>

namespace normpow {

/// Polynomial in one real variable with double coefficients (index = power).
/// Numeric counterpart of a family member at a fixed q; batch evaluation goes
/// through the dispatched SIMD kernels.
class RealPoly {
 public:
  RealPoly() = default;
  explicit RealPoly(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {}

  /// g_{p,q} at numeric q.
  static RealPoly member(int p, double q);

  const std::vector<double>& coeffs() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  /// Horner, same operation order as the batch kernels.
  double operator()(double x) const;
  void evaluate(std::span<const double> x, std::span<double> out) const;
  std::vector<double> evaluate(std::span<const double> x) const;
  void evaluate_with_derivative(std::span<const double> x, std::span<double> value,
                                std::span<double> deriv) const;

  RealPoly derivative() const;
  /// (p(x) - p(root)) / (x - root) by synthetic division; avoids the
  /// cancellation of forming the difference quotient directly.
  RealPoly divided_difference(double root) const;
  /// sum |c_k| |x|^k: magnitude scale for rounding-error tolerances.
  double magnitude(double x) const;

 private:
  std::vector<double> coeffs_;
};

}  // namespace normpow
