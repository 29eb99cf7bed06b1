#pragma once

#include "normpow/qpoly.hpp"

namespace normpow {

/// prod_{i=1}^p (nu + i), left to right in double.
double holder_bound_product(int p, double nu);

/// Lower bound on any nu-Hoelder constant of D^p f_{p+nu}: the product for
/// even p, 2^{1-nu} times the product for odd p.
double lower_bound_C(int p, double nu);

struct H2Optimum {
  double value = 0.0;
  double tau_star = 0.0;
};

/// Exact Hoelder constant of g_{2,2+nu} on [0, 1] and its maximizer
/// nu / (2 - nu). Uses 0^0 = 1 at nu = 1.
H2Optimum optimal_H2(double nu);

struct HolderEstimateOptions {
  int grid = 2001;
  double tol = 1e-10;
  bool cross_check = true;
  int cross_check_grid = 201;
};

struct HolderEstimate {
  /// max(line_value, grid_value)
  double value = 0.0;
  /// tau_1 attaining line_value.
  double argmax = 0.0;
  /// max over tau_1 in [0, 1] of (g(1) - g(tau_1)) / (1 - tau_1)^nu.
  double line_value = 0.0;
  /// max over the 2-D grid 0 <= tau_1 < tau_2 <= 1; NaN when not run.
  double grid_value = 0.0;
};

/// Hoelder constant of g_{p,p+nu} on [0, 1]. The maximization is reduced to
/// tau_2 = 1 and solved by a grid scan plus golden-section refinement; the
/// optional 2-D grid scan must not exceed the 1-D result, otherwise
/// MonotonicityViolation is thrown. For nu = 0 the value is g(1) - g(0).
HolderEstimate estimate_H_poly(int p, double nu, const HolderEstimateOptions& options = {});
double estimate_H_poly(int p, double nu, int grid, double tol);

/// Constant on [-1, 1] from the constant H on [0, 1]: H for even p,
/// 2^{1-nu} H for odd p.
double extend_H_to_symmetric(int p, double nu, double H);

/// Whole-space constant with a given H for the even branch:
/// (p-1)!! prod_{i=1}^{p/2} (nu + 2i) + H (even), 2^{1-nu} prod (nu + i) (odd).
double constant_A(int p, double nu, double H);
/// constant_A with the product bound in place of H.
double constant_A_tilde(int p, double nu);

/// (p + 1)!, exact.
BigInt lipschitz_constant(int p);

struct HolderConstants {
  int p = 0;
  double nu = 0.0;
  double C = 0.0;
  double H_bound = 0.0;
  double H_est = 0.0;
  double H_sym = 0.0;
  double A = 0.0;
  double A_tilde = 0.0;
};

HolderConstants compute_constants(int p, double nu, const HolderEstimateOptions& options = {});

}  // namespace normpow
