#include "normpow/constants.hpp"
#include "normpow/polyfamily.hpp"

#include "checks.hpp"

#include <cmath>

namespace normpow {

double holder_bound_product(int p, double nu) {
  detail::check_p_nu(p, nu);
  double prod = 1.0;
  for (int i = 1; i <= p; ++i) prod *= nu + i;
  return prod;
}

double lower_bound_C(int p, double nu) {
  const double prod = holder_bound_product(p, nu);
  return p % 2 == 0 ? prod : std::pow(2.0, 1.0 - nu) * prod;
}

H2Optimum optimal_H2(double nu) {
  detail::check_p_nu(2, nu);
  // pow(0, 0) == 1 covers nu = 1.
  const double value = nu * (nu + 2.0) * std::pow(2.0, 2.0 - nu) * std::pow(1.0 - nu, 1.0 - nu) /
                       std::pow(2.0 - nu, 2.0 - nu);
  return {value, nu / (2.0 - nu)};
}

double extend_H_to_symmetric(int p, double nu, double H) {
  detail::check_p_nu(p, nu);
  if (!(H >= 0.0)) throw DomainError("Hoelder constant must be non-negative");
  return p % 2 == 0 ? H : std::pow(2.0, 1.0 - nu) * H;
}

double constant_A(int p, double nu, double H) {
  detail::check_p_nu(p, nu);
  if (p % 2 == 1) return lower_bound_C(p, nu);
  if (!(H >= 0.0)) throw DomainError("Hoelder constant must be non-negative");
  double prod = double_factorial(p - 1).convert_to<double>();
  for (int i = 1; i <= p / 2; ++i) prod *= nu + 2 * i;
  return prod + H;
}

double constant_A_tilde(int p, double nu) {
  return constant_A(p, nu, holder_bound_product(p, nu));
}

BigInt lipschitz_constant(int p) {
  if (p < 0) throw DomainError("p must be non-negative, got " + std::to_string(p));
  return factorial(p + 1);
}

HolderConstants compute_constants(int p, double nu, const HolderEstimateOptions& options) {
  HolderConstants c;
  c.p = p;
  c.nu = nu;
  c.C = lower_bound_C(p, nu);
  c.H_bound = holder_bound_product(p, nu);
  c.H_est = estimate_H_poly(p, nu, options).value;
  c.H_sym = extend_H_to_symmetric(p, nu, c.H_est);
  c.A = constant_A(p, nu, c.H_est);
  c.A_tilde = constant_A_tilde(p, nu);
  return c;
}

}  // namespace normpow
