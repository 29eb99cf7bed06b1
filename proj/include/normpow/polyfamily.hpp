#pragma once

#include "normpow/qpoly.hpp"
#include "normpow/report.hpp"

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace normpow {

/// Polynomial in tau whose coefficients are exact polynomials in q.
/// tau_coeffs()[k] is the coefficient of tau^k; canonical form has no trailing
/// zero coefficient (the zero polynomial is empty).
class BiPoly {
 public:
  BiPoly() = default;
  explicit BiPoly(std::vector<QPoly> tau_coeffs);

  static BiPoly one();
  /// c * tau^k
  static BiPoly monomial(QPoly c, std::size_t k);

  const std::vector<QPoly>& tau_coeffs() const { return tau_coeffs_; }
  const QPoly& coeff(std::size_t k) const;
  bool is_zero() const { return tau_coeffs_.empty(); }
  int tau_degree() const { return static_cast<int>(tau_coeffs_.size()) - 1; }

  BiPoly operator-() const;
  BiPoly& operator+=(const BiPoly& other);
  BiPoly& operator-=(const BiPoly& other);
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(const BiPoly& a, const QPoly& s);
  friend BiPoly operator*(const QPoly& s, const BiPoly& a) { return a * s; }
  friend bool operator==(const BiPoly&, const BiPoly&) = default;

  /// d/dtau, exact.
  BiPoly derivative() const;
  BiPoly times_tau() const;
  BiPoly times_one_minus_tau_sq() const;
  /// Substitutes q -> q + delta in every coefficient.
  BiPoly shift_q(long delta) const;

  /// Exact value at tau = 0 and tau = 1, as polynomials in q.
  QPoly at_tau_zero() const;
  QPoly at_tau_one() const;

  /// Double coefficients in tau for a fixed numeric q (Horner in q).
  std::vector<double> specialize(double q) const;

  std::string to_string() const;

 private:
  void canonicalize();
  std::vector<QPoly> tau_coeffs_;
};

/// Family member g_{p,q}: the polynomial together with its index p.
struct GPoly {
  int p = 0;
  BiPoly poly;

  friend bool operator==(const GPoly&, const GPoly&) = default;
};

/// g_0 .. g_{p_max}, built from
///   g_{p,q} = (1 - tau^2) g'_{p-1,q} + (q - p + 1) tau g_{p-1,q},  g_{0,q} = 1.
std::vector<GPoly> generate_family(int p_max);

/// Cached family member; thread-safe, grows on demand.
const GPoly& family_member(int p);

/// Double tau-coefficients of g_{p,q} at numeric q, from a cached double copy
/// of the exact coefficients.
std::vector<double> specialize_member(int p, double q);

BiPoly poly_derivative(const BiPoly& g);
GPoly shift_q(const GPoly& g, long delta);

/// Nested Horner evaluation: Horner in q for each tau-coefficient, then Horner
/// in tau. The operation order is fixed; both levels run in double-double
/// arithmetic and the result is rounded once at the end.
double eval_poly(const BiPoly& g, double q, double tau);
inline double eval_poly(const GPoly& g, double q, double tau) { return eval_poly(g.poly, q, tau); }

/// Exact values (g_{p,q}(0), g_{p,q}(1)) read off the generated coefficients.
std::pair<QPoly, QPoly> boundary_values(int p);

/// Closed forms: (p-1)!! prod_{i<p/2} (q - 2i) for even p (0 for odd p) and
/// prod_{i<p} (q - i).
QPoly closed_form_value_at_zero(int p);
QPoly closed_form_value_at_one(int p);

/// n!! with (-1)!! = 0!! = 1.
BigInt double_factorial(int n);
BigInt factorial(int n);

/// Names of the exact identity families, in report order.
const std::vector<std::string>& identity_names();

/// Exact coefficient-level check of every algebraic identity of the family for
/// p = 0..p_max (each identity from the smallest p where it applies).
VerifyReport check_identity_suite(int p_max);
/// Same checks against a caller-supplied family (element p must have p == index).
VerifyReport check_identity_suite(const std::vector<GPoly>& family);

nlohmann::ordered_json to_json(const GPoly& g);
GPoly gpoly_from_json(const nlohmann::ordered_json& j);

}  // namespace normpow
