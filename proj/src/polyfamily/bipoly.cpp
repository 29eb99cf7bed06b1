#include "normpow/polyfamily.hpp"

#include <cmath>
#include <sstream>

namespace normpow {

BiPoly::BiPoly(std::vector<QPoly> tau_coeffs) : tau_coeffs_(std::move(tau_coeffs)) {
  canonicalize();
}

BiPoly BiPoly::one() { return BiPoly({QPoly::constant(1)}); }

BiPoly BiPoly::monomial(QPoly c, std::size_t k) {
  std::vector<QPoly> coeffs(k + 1);
  coeffs[k] = std::move(c);
  return BiPoly(std::move(coeffs));
}

void BiPoly::canonicalize() {
  while (!tau_coeffs_.empty() && tau_coeffs_.back().is_zero()) tau_coeffs_.pop_back();
}

const QPoly& BiPoly::coeff(std::size_t k) const {
  static const QPoly zero;
  return k < tau_coeffs_.size() ? tau_coeffs_[k] : zero;
}

BiPoly BiPoly::operator-() const {
  BiPoly r = *this;
  for (auto& c : r.tau_coeffs_) c = -c;
  return r;
}

BiPoly& BiPoly::operator+=(const BiPoly& other) {
  if (other.tau_coeffs_.size() > tau_coeffs_.size()) tau_coeffs_.resize(other.tau_coeffs_.size());
  for (std::size_t k = 0; k < other.tau_coeffs_.size(); ++k) tau_coeffs_[k] += other.tau_coeffs_[k];
  canonicalize();
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& other) {
  if (other.tau_coeffs_.size() > tau_coeffs_.size()) tau_coeffs_.resize(other.tau_coeffs_.size());
  for (std::size_t k = 0; k < other.tau_coeffs_.size(); ++k) tau_coeffs_[k] -= other.tau_coeffs_[k];
  canonicalize();
  return *this;
}

BiPoly operator*(const BiPoly& a, const QPoly& s) {
  std::vector<QPoly> out;
  out.reserve(a.tau_coeffs_.size());
  for (const auto& c : a.tau_coeffs_) out.push_back(c * s);
  return BiPoly(std::move(out));
}

BiPoly BiPoly::derivative() const {
  if (tau_coeffs_.size() <= 1) return {};
  std::vector<QPoly> out(tau_coeffs_.size() - 1);
  for (std::size_t k = 1; k < tau_coeffs_.size(); ++k) {
    out[k - 1] = tau_coeffs_[k] * BigInt(k);
  }
  return BiPoly(std::move(out));
}

BiPoly BiPoly::times_tau() const {
  if (is_zero()) return {};
  std::vector<QPoly> out;
  out.reserve(tau_coeffs_.size() + 1);
  out.emplace_back();
  out.insert(out.end(), tau_coeffs_.begin(), tau_coeffs_.end());
  return BiPoly(std::move(out));
}

BiPoly BiPoly::times_one_minus_tau_sq() const {
  return *this - times_tau().times_tau();
}

BiPoly BiPoly::shift_q(long delta) const {
  std::vector<QPoly> out;
  out.reserve(tau_coeffs_.size());
  for (const auto& c : tau_coeffs_) out.push_back(c.shifted(delta));
  return BiPoly(std::move(out));
}

QPoly BiPoly::at_tau_zero() const { return coeff(0); }

QPoly BiPoly::at_tau_one() const {
  QPoly sum;
  for (const auto& c : tau_coeffs_) sum += c;
  return sum;
}

std::vector<double> BiPoly::specialize(double q) const {
  std::vector<double> out(tau_coeffs_.size());
  for (std::size_t k = 0; k < tau_coeffs_.size(); ++k) out[k] = tau_coeffs_[k].evaluate(q);
  return out;
}

std::string BiPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = tau_degree(); k >= 0; --k) {
    const QPoly& c = tau_coeffs_[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string() << ")";
    if (k > 0) os << "*tau";
    if (k > 1) os << "^" << k;
  }
  return os.str();
}

BiPoly poly_derivative(const BiPoly& g) { return g.derivative(); }

GPoly shift_q(const GPoly& g, long delta) { return {g.p, g.poly.shift_q(delta)}; }

namespace {

// Double-double value hi + lo, |lo| <= ulp(hi) / 2.
struct Dd {
  double hi = 0.0;
  double lo = 0.0;
};

Dd quick_two_sum(double a, double b) {
  const double s = a + b;
  return {s, b - (s - a)};
}

Dd add(Dd x, Dd y) {
  const double s = x.hi + y.hi;
  const double bb = s - x.hi;
  const double err = (x.hi - (s - bb)) + (y.hi - bb);
  return quick_two_sum(s, err + x.lo + y.lo);
}

Dd mul(Dd x, double d) {
  const double p = x.hi * d;
  const double err = std::fma(x.hi, d, -p);
  return quick_two_sum(p, err + x.lo * d);
}

Dd to_dd(const BigInt& c) {
  const double hi = c.convert_to<double>();
  return {hi, BigInt(c - BigInt(hi)).convert_to<double>()};
}

}  // namespace

double eval_poly(const BiPoly& g, double q, double tau) {
  // Horner in tau over Horner in q, carried in double-double so the result is
  // accurate despite cancellation between the tau terms.
  Dd acc;
  for (auto it = g.tau_coeffs().rbegin(); it != g.tau_coeffs().rend(); ++it) {
    Dd c;
    for (auto jt = it->coeffs().rbegin(); jt != it->coeffs().rend(); ++jt) {
      c = add(mul(c, q), to_dd(*jt));
    }
    acc = add(mul(acc, tau), c);
  }
  return acc.hi + acc.lo;
}

}  // namespace normpow
