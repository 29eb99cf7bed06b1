#include "normpow/error.hpp"
#include "normpow/normcalc.hpp"

#include <array>
#include <cmath>

namespace normpow {

double fd_default_step(int p, double x_norm) {
  const double base = p <= 2 ? 1e-5 : 1e-3;
  return base * std::max(1.0, x_norm);
}

double fd_oracle(const Metric& metric, int p, double q, const Vector& x, const Vector& h,
                 double step) {
  if (p < 1 || p > 4) throw DomainError("fd_oracle supports p in 1..4, got " + std::to_string(p));
  if (!(step > 0.0)) throw DomainError("fd_oracle step must be positive");
  if (x.size() != metric.dim() || h.size() != metric.dim()) {
    throw DimensionMismatch("fd_oracle: vector dimension does not match the metric");
  }

  // p-fold central difference with half-step offsets:
  //   delta^p phi(0) = sum_k (-1)^k C(p,k) phi((p/2 - k) step)
  static constexpr std::array<std::array<int, 5>, 5> binom = {{
      {1, 0, 0, 0, 0},
      {1, 1, 0, 0, 0},
      {1, 2, 1, 0, 0},
      {1, 3, 3, 1, 0},
      {1, 4, 6, 4, 1},
  }};
  double acc = 0.0;
  for (int k = 0; k <= p; ++k) {
    const double t = (0.5 * p - k) * step;
    const Vector point = x + t * h;
    const double r = metric.norm(point);
    if (r == 0.0) throw StencilHitsOrigin("finite-difference stencil contains the origin");
    const double term = binom[static_cast<std::size_t>(p)][static_cast<std::size_t>(k)] * std::pow(r, q);
    acc += (k % 2 == 0) ? term : -term;
  }
  return acc / std::pow(step, p);
}

double fd_oracle(const Metric& metric, int p, double q, const Vector& x, const Vector& h) {
  return fd_oracle(metric, p, q, x, h, fd_default_step(p, metric.norm(x)));
}

}  // namespace normpow
