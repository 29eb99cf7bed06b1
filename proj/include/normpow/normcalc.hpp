#pragma once

#include "normpow/real_poly.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Core>

#include <cstdint>
#include <span>
#include <vector>

namespace normpow {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/// Euclidean geometry given by a self-adjoint positive definite operator B:
/// <x, y>_B = x^T B y and ||x|| = sqrt(x^T B x).
class Metric {
 public:
  /// Validates symmetry (1e-12 relative) and positive definiteness.
  /// Throws NotSymmetric / NotPositiveDefinite / DimensionMismatch.
  explicit Metric(const Matrix& b);

  static Metric identity(int dim);

  int dim() const { return static_cast<int>(b_.rows()); }
  const Matrix& b() const { return b_; }
  /// Lower-triangular L with B = L L^T.
  const Matrix& cholesky_lower() const { return chol_; }

  double inner(const Vector& x, const Vector& y) const;
  double norm(const Vector& x) const;
  /// h with L^T h = u, so that ||h|| equals the Euclidean length of u.
  /// Maps standard normal samples to B-isotropic ones.
  Vector from_whitened(const Vector& u) const;

 private:
  Matrix b_;
  Matrix chol_;
  Eigen::LLT<Matrix> llt_;
};

Metric make_metric(const Matrix& entries);
Metric make_metric(const std::vector<std::vector<double>>& rows);

/// <Bx, h> / ||x||, with tau(0) = 0. h must be a unit vector (1e-10), else
/// NonUnitDirection. Clamped into [-1, 1].
double tau(const Metric& metric, const Vector& x, const Vector& h);

/// D^p f_q(x)[h]^p for f_q(x) = ||x||^q, via ||x||^{q-p} g_{p,q}(tau_h(x)) for
/// unit h; non-unit h is normalized and the result scaled by ||h||^p.
/// At x = 0 the value is 0 when p < q; UndefinedAtOrigin otherwise.
double deriv_diag(const Metric& metric, int p, double q, const Vector& x, const Vector& h);

/// Mixed value D^p f_q(x)[h_1, ..., h_p] by polarization over the 2^p - 1
/// nonempty direction subsets. Needs x != 0 and exactly p directions.
double deriv_mixed(const Metric& metric, int p, double q, const Vector& x,
                   std::span<const Vector> directions);

/// Step used by fd_oracle when none is given: 1e-5 max(1, ||x||) for p <= 2,
/// 1e-3 max(1, ||x||) for p = 3, 4.
double fd_default_step(int p, double x_norm);

/// p-th derivative of t -> f_q(x + t h) at t = 0 by p nested central
/// differences (stencil points x + (p/2 - k) step h, k = 0..p). p in 1..4.
/// Throws StencilHitsOrigin if a stencil point is the origin.
double fd_oracle(const Metric& metric, int p, double q, const Vector& x, const Vector& h,
                 double step);
double fd_oracle(const Metric& metric, int p, double q, const Vector& x, const Vector& h);

/// Evaluator of D^p f_q with the polynomial coefficients resolved once.
/// Use this in loops; deriv_diag builds one per call.
class PowerDerivative {
 public:
  PowerDerivative(int p, double q);

  int p() const { return p_; }
  double q() const { return q_; }

  /// D^p f_q(x)[h]^p for B-unit h (not checked).
  double diag_unit(const Metric& metric, const Vector& x, const Vector& h) const;
  const RealPoly& poly() const { return g_; }
  const RealPoly& poly_derivative() const { return dg_; }

 private:
  double radial_factor(double r) const;

  int p_;
  double q_;
  RealPoly g_;
  RealPoly dg_;
};

struct NormSearchOptions {
  /// Random B-uniform starting directions, in addition to the directions of
  /// x1, x2 and x2 - x1.
  int starts = 64;
  std::uint64_t seed = 0xC0FFEE;
  int max_iterations = 500;
  double gradient_tolerance = 1e-12;
};

struct NormEstimate {
  /// max over evaluated unit h of |L[h]^p|; a lower bound on ||L||.
  double value = 0.0;
  Vector direction;
};

/// Lower bound on ||D^p f_{p+nu}(x2) - D^p f_{p+nu}(x1)|| (symmetric form norm,
/// max over the B-unit sphere) by multi-start projected gradient ascent with
/// step-halving line search. Deterministic for a fixed seed.
NormEstimate tensor_diff_norm_lb(const Metric& metric, int p, double nu, const Vector& x1,
                                 const Vector& x2, const NormSearchOptions& options = {});

/// splitmix64 step; derives independent per-start / per-sample seeds.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index);

}  // namespace normpow
