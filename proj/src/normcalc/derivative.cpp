#include "normpow/error.hpp"
#include "normpow/normcalc.hpp"
#include "normpow/polyfamily.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

namespace normpow {

namespace {

void require_dim(const Metric& metric, const Vector& v, const char* what) {
  if (v.size() != metric.dim()) {
    throw DimensionMismatch(std::string(what) + " has dimension " + std::to_string(v.size()) +
                            ", metric has " + std::to_string(metric.dim()));
  }
}

[[noreturn]] void throw_origin(int p, double q) {
  throw UndefinedAtOrigin("D^" + std::to_string(p) + " f_q at x = 0 needs p < q (q = " +
                          std::to_string(q) + ")");
}

double clamp_unit(double t) { return std::clamp(t, -1.0, 1.0); }

double scaled_diag(const PowerDerivative& d, const Metric& metric, const Vector& x,
                   const Vector& h) {
  if (d.p() == 0) return d.diag_unit(metric, x, h);
  const double hn = metric.norm(h);
  if (hn == 0.0) return 0.0;
  return std::pow(hn, d.p()) * d.diag_unit(metric, x, h / hn);
}

}  // namespace

double tau(const Metric& metric, const Vector& x, const Vector& h) {
  require_dim(metric, x, "x");
  require_dim(metric, h, "h");
  const double hn = metric.norm(h);
  if (std::abs(hn - 1.0) > 1e-10) {
    throw NonUnitDirection("direction must have unit norm, got " + std::to_string(hn));
  }
  const double r = metric.norm(x);
  if (r == 0.0) return 0.0;
  return clamp_unit(metric.inner(x, h) / r);
}

PowerDerivative::PowerDerivative(int p, double q)
    : p_(p), q_(q), g_(RealPoly::member(p, q)), dg_(g_.derivative()) {
  if (p < 0) throw DomainError("derivative order must be non-negative");
}

double PowerDerivative::radial_factor(double r) const { return std::pow(r, q_ - p_); }

double PowerDerivative::diag_unit(const Metric& metric, const Vector& x, const Vector& h) const {
  const double r = metric.norm(x);
  if (r == 0.0) {
    if (p_ < q_) return 0.0;
    throw_origin(p_, q_);
  }
  const double t = clamp_unit(metric.inner(x, h) / r);
  return radial_factor(r) * g_(t);
}

double deriv_diag(const Metric& metric, int p, double q, const Vector& x, const Vector& h) {
  require_dim(metric, x, "x");
  require_dim(metric, h, "h");
  if (p < 0) throw DomainError("derivative order must be non-negative");
  if (metric.norm(x) == 0.0 && !(p < q)) throw_origin(p, q);
  return scaled_diag(PowerDerivative(p, q), metric, x, h);
}

double deriv_mixed(const Metric& metric, int p, double q, const Vector& x,
                   std::span<const Vector> directions) {
  require_dim(metric, x, "x");
  if (p < 0) throw DomainError("derivative order must be non-negative");
  if (static_cast<int>(directions.size()) != p) {
    throw ArgumentCountMismatch("expected " + std::to_string(p) + " directions, got " +
                                std::to_string(directions.size()));
  }
  for (const auto& h : directions) require_dim(metric, h, "direction");
  if (metric.norm(x) == 0.0) {
    throw UndefinedAtOrigin("mixed derivatives by polarization need x != 0");
  }
  if (p > 20) throw DomainError("polarization over more than 20 directions is not supported");

  const PowerDerivative d(p, q);
  if (p == 0) return d.diag_unit(metric, x, x);

  // L[h_1..h_p] = (1/p!) sum_{S != {}} (-1)^{p-|S|} L[sum_{i in S} h_i]^p
  double sum = 0.0;
  Vector s(metric.dim());
  for (std::uint32_t mask = 1; mask < (1u << p); ++mask) {
    s.setZero();
    for (int i = 0; i < p; ++i) {
      if (mask & (1u << i)) s += directions[static_cast<std::size_t>(i)];
    }
    const int size = std::popcount(mask);
    const double term = scaled_diag(d, metric, x, s);
    sum += ((p - size) % 2 == 0) ? term : -term;
  }
  return sum / factorial(p).convert_to<double>();
}

}  // namespace normpow
