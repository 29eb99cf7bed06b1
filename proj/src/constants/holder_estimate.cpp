#include "normpow/constants.hpp"
#include "normpow/error.hpp"
#include "normpow/real_poly.hpp"

#include "checks.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <vector>

namespace normpow {

namespace {

std::vector<double> unit_grid(int n) {
  std::vector<double> t(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) t[static_cast<std::size_t>(i)] = static_cast<double>(i) / (n - 1);
  t.back() = 1.0;
  return t;
}

// (g(b) - g(a)) / (b - a)^nu written as dd_a(b) (b - a)^{1 - nu}.
double quotient(double dd, double gap, double nu) { return dd * std::pow(gap, 1.0 - nu); }

struct Maximum {
  double value;
  double at;
};

template <class F>
Maximum golden_section_max(F&& f, double lo, double hi, double tol) {
  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo;
  double b = hi;
  double c = b - invphi * (b - a);
  double d = a + invphi * (b - a);
  double fc = f(c);
  double fd = f(d);
  while (b - a > tol) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - invphi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + invphi * (b - a);
      fd = f(d);
    }
  }
  return fc >= fd ? Maximum{fc, c} : Maximum{fd, d};
}

Maximum line_maximum(const RealPoly& g, double nu, const HolderEstimateOptions& options) {
  const RealPoly dd = g.divided_difference(1.0);
  auto objective = [&](double t) { return quotient(dd(t), 1.0 - t, nu); };

  const std::vector<double> t = unit_grid(options.grid);
  const std::vector<double> v = dd.evaluate(t);
  std::size_t best = 0;
  double best_value = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < t.size(); ++i) {
    const double r = quotient(v[i], 1.0 - t[i], nu);
    if (r > best_value) {
      best_value = r;
      best = i;
    }
  }

  Maximum result{best_value, t[best]};
  const double lo = t[best == 0 ? 0 : best - 1];
  const double hi = t[std::min(best + 1, t.size() - 1)];
  const Maximum refined = golden_section_max(objective, lo, hi, options.tol);
  if (refined.value > result.value) result = refined;
  return result;
}

double grid_maximum(const RealPoly& g, double nu, int n) {
  const std::vector<double> t = unit_grid(n);
  double best = -std::numeric_limits<double>::infinity();
  std::vector<double> tail;
  std::vector<double> values;
  for (std::size_t i = 0; i + 1 < t.size(); ++i) {
    const RealPoly dd = g.divided_difference(t[i]);
    tail.assign(t.begin() + static_cast<std::ptrdiff_t>(i) + 1, t.end());
    values.resize(tail.size());
    dd.evaluate(tail, values);
    for (std::size_t j = 0; j < tail.size(); ++j) {
      best = std::max(best, quotient(values[j], tail[j] - t[i], nu));
    }
  }
  return best;
}

}  // namespace

HolderEstimate estimate_H_poly(int p, double nu, const HolderEstimateOptions& options) {
  detail::check_p_nu(p, nu);
  if (options.grid < 3) throw DomainError("grid must have at least 3 points");
  if (options.cross_check && options.cross_check_grid < 2) {
    throw DomainError("cross-check grid must have at least 2 points");
  }
  if (!(options.tol > 0.0)) throw DomainError("tolerance must be positive");

  const RealPoly g = RealPoly::member(p, p + nu);
  HolderEstimate est;
  if (nu == 0.0) {
    est.line_value = g(1.0) - g(0.0);
    est.argmax = 0.0;
  } else {
    const Maximum m = line_maximum(g, nu, options);
    est.line_value = m.value;
    est.argmax = m.at;
  }
  est.value = est.line_value;
  est.grid_value = std::numeric_limits<double>::quiet_NaN();

  if (options.cross_check) {
    est.grid_value = grid_maximum(g, nu, options.cross_check_grid);
    const double allowed = est.line_value + 1e-9 * std::abs(est.line_value) + 1e-12;
    if (est.grid_value > allowed) {
      std::ostringstream os;
      os.precision(17);
      os << "2-D grid maximum " << est.grid_value << " exceeds the tau_2 = 1 maximum "
         << est.line_value << " for p = " << p << ", nu = " << nu;
      throw MonotonicityViolation(os.str());
    }
    est.value = std::max(est.line_value, est.grid_value);
  }
  return est;
}

double estimate_H_poly(int p, double nu, int grid, double tol) {
  HolderEstimateOptions options;
  options.grid = grid;
  options.tol = tol;
  return estimate_H_poly(p, nu, options).value;
}

}  // namespace normpow
