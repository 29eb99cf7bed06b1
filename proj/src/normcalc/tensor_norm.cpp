#include "normpow/error.hpp"
#include "normpow/normcalc.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace normpow {

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
  std::uint64_t z = base + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

namespace {

// One endpoint's contribution ||x||^{q-p} g(<Bx, h> / ||x||), with Bx and
// ||x|| resolved once.
struct Endpoint {
  Vector bx_over_r;
  Vector x_over_r;
  double radial = 0.0;
  bool origin = false;
};

class DifferenceForm {
 public:
  DifferenceForm(const Metric& metric, const PowerDerivative& d, const Vector& x1,
                 const Vector& x2)
      : metric_(metric), d_(d), e1_(endpoint(x1)), e2_(endpoint(x2)), bh_(metric.dim()) {}

  double value(const Vector& h) const { return term(e2_, h) - term(e1_, h); }

  /// Riemannian gradient on the B-unit sphere of sign * value, into grad.
  void gradient(const Vector& h, double sign, Vector& grad) const {
    grad.setZero();
    add_gradient(e2_, h, sign, grad);
    add_gradient(e1_, h, -sign, grad);
  }

  /// Rescales h to B-unit length; returns false for a degenerate h.
  bool normalize(Vector& h) {
    bh_.noalias() = metric_.b() * h;
    const double n = std::sqrt(std::max(0.0, h.dot(bh_)));
    if (!(n > 0.0) || !std::isfinite(n)) return false;
    h /= n;
    return true;
  }

  double norm(const Vector& v) {
    bh_.noalias() = metric_.b() * v;
    return std::sqrt(std::max(0.0, v.dot(bh_)));
  }

 private:
  Endpoint endpoint(const Vector& x) const {
    Endpoint e;
    const double r = metric_.norm(x);
    if (r == 0.0) {
      if (!(d_.p() < d_.q())) {
        throw UndefinedAtOrigin("D^p f_q at x = 0 needs p < q");
      }
      e.origin = true;
      return e;
    }
    e.x_over_r = x / r;
    e.bx_over_r = metric_.b() * e.x_over_r;
    e.radial = std::pow(r, d_.q() - d_.p());
    return e;
  }

  static double cosine(const Endpoint& e, const Vector& h) {
    return std::clamp(e.bx_over_r.dot(h), -1.0, 1.0);
  }

  double term(const Endpoint& e, const Vector& h) const {
    if (e.origin) return 0.0;
    return e.radial * d_.poly()(cosine(e, h));
  }

  void add_gradient(const Endpoint& e, const Vector& h, double sign, Vector& grad) const {
    if (e.origin) return;
    const double t = cosine(e, h);
    const double slope = sign * e.radial * d_.poly_derivative()(t);
    grad.noalias() += slope * e.x_over_r - (slope * t) * h;
  }

  const Metric& metric_;
  const PowerDerivative& d_;
  Endpoint e1_;
  Endpoint e2_;
  Vector bh_;
};

// Projected gradient ascent of |L[h]^p| on the B-unit sphere from start h.
double ascend(DifferenceForm& form, Vector& h, const NormSearchOptions& options) {
  Vector grad(h.size());
  Vector trial(h.size());
  double current = form.value(h);
  double step = 0.5;
  for (int it = 0; it < options.max_iterations; ++it) {
    const double sign = current < 0.0 ? -1.0 : 1.0;
    form.gradient(h, sign, grad);
    const double gnorm = form.norm(grad);
    if (gnorm <= options.gradient_tolerance * std::max(1.0, std::abs(current))) break;

    bool improved = false;
    while (step > 1e-16) {
      trial.noalias() = h + (step / gnorm) * grad;
      if (!form.normalize(trial)) break;
      const double v = form.value(trial);
      if (std::abs(v) > std::abs(current)) {
        h.swap(trial);
        current = v;
        step = std::min(2.0 * step, 1.0);
        improved = true;
        break;
      }
      step *= 0.5;
    }
    if (!improved) break;
  }
  return std::abs(current);
}

}  // namespace

NormEstimate tensor_diff_norm_lb(const Metric& metric, int p, double nu, const Vector& x1,
                                 const Vector& x2, const NormSearchOptions& options) {
  if (p < 0) throw DomainError("derivative order must be non-negative");
  if (!(nu >= 0.0 && nu <= 1.0)) throw DomainError("nu must lie in [0, 1]");
  if (options.starts < 1) throw DomainError("need at least one start");
  if (x1.size() != metric.dim() || x2.size() != metric.dim()) {
    throw DimensionMismatch("tensor_diff_norm_lb: vector dimension does not match the metric");
  }

  const double q = p + nu;
  const PowerDerivative d(p, q);
  DifferenceForm form(metric, d, x1, x2);

  NormEstimate best;
  best.direction = Vector::Zero(metric.dim());
  best.direction(0) = 1.0;
  best.direction /= metric.norm(best.direction);
  best.value = std::abs(form.value(best.direction));
  if (p == 0) return best;  // a 0-form does not depend on h

  auto consider = [&](Vector h) {
    if (!form.normalize(h)) return;
    const double v = ascend(form, h, options);
    if (v > best.value) {
      best.value = v;
      best.direction = h;
    }
  };

  consider(x2);
  consider(x1);
  consider(x2 - x1);

  std::normal_distribution<double> normal;
  Vector u(metric.dim());
  for (int k = 0; k < options.starts; ++k) {
    std::mt19937_64 rng(derive_seed(options.seed, static_cast<std::uint64_t>(k)));
    for (Eigen::Index i = 0; i < u.size(); ++i) u(i) = normal(rng);
    consider(metric.from_whitened(u));
  }
  return best;
}

}  // namespace normpow
