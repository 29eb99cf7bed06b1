#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <string>
#include <vector>

namespace normpow {

using BigInt = boost::multiprecision::cpp_int;

/// Exact univariate polynomial in q with arbitrary-precision integer
/// coefficients; coeffs()[i] is the coefficient of q^i.
///
/// Always kept in canonical form: no trailing zero coefficient, and the zero
/// polynomial is the empty sequence. Equality therefore compares canonical
/// forms directly.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<BigInt> coeffs);

  static QPoly constant(BigInt c);
  /// c0 + c1 * q
  static QPoly linear(BigInt c0, BigInt c1);

  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  /// Coefficient of q^i, zero beyond the degree.
  BigInt coeff(std::size_t i) const;

  QPoly operator-() const;
  QPoly& operator+=(const QPoly& other);
  QPoly& operator-=(const QPoly& other);
  QPoly& operator*=(const BigInt& scalar);

  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  friend QPoly operator*(QPoly a, const BigInt& s) { return a *= s; }
  friend QPoly operator*(const BigInt& s, QPoly a) { return a *= s; }
  friend bool operator==(const QPoly&, const QPoly&) = default;

  /// Substitutes q -> q + delta (binomial expansion, exact).
  QPoly shifted(long delta) const;

  BigInt evaluate(const BigInt& q) const;
  /// Horner in double precision, highest coefficient first.
  double evaluate(double q) const;
  /// Coefficients rounded to double, same indexing.
  std::vector<double> to_doubles() const;

  /// Human-readable form, e.g. "q^2 - 6*q + 8".
  std::string to_string() const;

 private:
  void canonicalize();
  std::vector<BigInt> coeffs_;
};

}  // namespace normpow
