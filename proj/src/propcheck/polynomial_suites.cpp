#include "normpow/error.hpp"
#include "normpow/propcheck.hpp"
#include "normpow/real_poly.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace normpow {

namespace {

constexpr int kQPoints = 31;
constexpr double kPolyTolerance = 1e-10;

using Params = std::vector<std::pair<std::string, double>>;

void check_args(int p_max, int grid) {
  if (p_max < 0) throw DomainError("p_max must be non-negative");
  if (grid < 2) throw DomainError("grid must have at least 2 points");
}

std::vector<double> q_values(int p, double lo_offset, double hi_offset) {
  std::vector<double> q(kQPoints);
  const double lo = p + lo_offset;
  const double hi = p + hi_offset;
  for (int i = 0; i < kQPoints; ++i) {
    q[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (kQPoints - 1);
  }
  return q;
}

/// Scale that turns a relative tolerance rel into the report's tolerance tol.
double relative_scale(double reference, double rel, double tol) {
  return std::abs(reference) * rel / tol;
}

double product_falling(int p, double q) {
  double prod = 1.0;
  for (int i = 0; i < p; ++i) prod *= q - i;
  return prod;
}

}  // namespace

std::vector<double> refined_unit_grid(int n) {
  if (n < 2) throw DomainError("grid must have at least 2 points");
  std::vector<double> t;
  t.reserve(static_cast<std::size_t>(n) + 14);
  for (int i = 0; i < n; ++i) t.push_back(static_cast<double>(i) / (n - 1));
  t.back() = 1.0;
  for (int k = 2; k <= 8; ++k) {
    const double e = std::pow(10.0, -k);
    t.push_back(e);
    t.push_back(1.0 - e);
  }
  std::sort(t.begin(), t.end());
  t.erase(std::unique(t.begin(), t.end()), t.end());
  return t;
}

std::vector<double> default_nu_grid() {
  std::vector<double> nu;
  for (int i = 1; i <= 10; ++i) nu.push_back(i / 10.0);
  return nu;
}

VerifyReport check_nonnegativity(int p_max, int grid, bool negative_control) {
  check_args(p_max, grid);
  VerifyReport report("nonnegativity", kPolyTolerance);
  const std::vector<double> tau = refined_unit_grid(grid);
  std::vector<double> values(tau.size());
  for (int p = 0; p <= p_max; ++p) {
    for (double q : q_values(p, negative_control ? -3.0 : -1.0, 2.0)) {
      const RealPoly g = RealPoly::member(p, q);
      g.evaluate(tau, values);
      for (std::size_t i = 0; i < tau.size(); ++i) {
        report.check_le("nonnegativity", {{"p", p}, {"q", q}, {"tau", tau[i]}}, 0.0, values[i],
                        g.magnitude(tau[i]));
      }
    }
  }
  return report;
}

VerifyReport check_monotonicity(int p_max, int grid, bool negative_control) {
  check_args(p_max, grid);
  VerifyReport report("monotonicity", kPolyTolerance);
  const std::vector<double> tau = refined_unit_grid(grid);
  std::vector<double> values(tau.size());
  for (int p = 0; p <= p_max; ++p) {
    for (double q : q_values(p, negative_control ? -2.0 : 0.0, 2.0)) {
      const RealPoly dg = RealPoly::member(p, q).derivative();
      dg.evaluate(tau, values);
      for (std::size_t i = 0; i < tau.size(); ++i) {
        report.check_le("monotonicity", {{"p", p}, {"q", q}, {"tau", tau[i]}}, 0.0, values[i],
                        dg.magnitude(tau[i]));
      }
    }
  }
  return report;
}

VerifyReport check_max_abs(int p_max, int grid, bool negative_control) {
  check_args(p_max, grid);
  VerifyReport report("max_abs", kPolyTolerance);
  const std::vector<double> half = refined_unit_grid(grid);
  std::vector<double> tau;
  for (auto it = half.rbegin(); it != half.rend(); ++it) {
    if (*it > 0.0) tau.push_back(-*it);
  }
  tau.insert(tau.end(), half.begin(), half.end());
  std::vector<double> values(tau.size());

  for (int p = 0; p <= p_max; ++p) {
    for (double q : q_values(p, negative_control ? -2.0 : 0.0, 2.0)) {
      const RealPoly g = RealPoly::member(p, q);
      g.evaluate(tau, values);
      std::size_t arg = 0;
      for (std::size_t i = 1; i < tau.size(); ++i) {
        if (std::abs(values[i]) > std::abs(values[arg])) arg = i;
      }
      const double max_abs = std::abs(values[arg]);
      const double at_ends = std::max(std::abs(values.front()), std::abs(values.back()));
      const double prod = product_falling(p, q);
      const Params params = {{"p", p}, {"q", q}, {"tau", tau[arg]}};
      report.check_le("bounded_by_product", params, max_abs, prod,
                      relative_scale(prod, 1e-9, kPolyTolerance));
      report.check_le("attained_at_endpoints", params, max_abs, at_ends, prod);
      report.check_le("endpoint_equals_product", params, prod, at_ends, prod);
    }
  }
  return report;
}

VerifyReport check_fraction_monotone(int p_max, std::span<const double> nu_grid, int tau_grid,
                                     bool negative_control) {
  check_args(p_max, tau_grid);
  VerifyReport report("fraction_monotone", kPolyTolerance);
  const std::vector<double> tau = refined_unit_grid(tau_grid);
  const std::vector<double> control_nu = {1.5, 2.0};
  const std::span<const double> nus = negative_control ? std::span<const double>(control_nu) : nu_grid;

  for (int p = 0; p <= p_max; ++p) {
    for (double nu : nus) {
      if (!negative_control && !(nu >= 0.0 && nu <= 1.0)) {
        throw DomainError("nu must lie in [0, 1]");
      }
      const RealPoly g = RealPoly::member(p, p + nu);

      // tau_2 -> (g(tau_2) - g(tau_1)) / (tau_2 - tau_1)^nu
      for (int k = 0; k < 10; ++k) {
        const double t1 = k / 10.0;
        const RealPoly dd = g.divided_difference(t1);
        double prev = 0.0;
        double prev_t = 0.0;
        bool first = true;
        for (double t2 : tau) {
          if (!(t2 > t1)) continue;
          const double r = dd(t2) * std::pow(t2 - t1, 1.0 - nu);
          if (!first) {
            const double scale = std::max({std::abs(prev), std::abs(r), dd.magnitude(t2)});
            report.check_le("difference_quotient_increasing",
                            {{"p", p}, {"nu", nu}, {"tau1", t1}, {"tau2", t2}, {"tau2_prev", prev_t}},
                            prev, r, scale);
          }
          prev = r;
          prev_t = t2;
          first = false;
        }
      }

      // tau -> g(tau) / (1 - (1 - tau)^nu)
      if (nu == 0.0) continue;
      double prev = 0.0;
      double prev_t = 0.0;
      bool first = true;
      for (double t : tau) {
        if (!(t > 0.0)) continue;
        const double denom = -std::expm1(nu * std::log1p(-t));
        const double m = g(t) / denom;
        if (!first) {
          const double scale = std::max({std::abs(prev), std::abs(m), g.magnitude(t) / denom});
          report.check_le("boundary_ratio_decreasing",
                          {{"p", p}, {"nu", nu}, {"tau", t}, {"tau_prev", prev_t}}, m, prev, scale);
        }
        prev = m;
        prev_t = t;
        first = false;
      }
    }
  }
  return report;
}

VerifyReport check_inequality_lemmas(int p_max, std::span<const double> nu_grid, int tau_grid,
                                     bool negative_control) {
  check_args(p_max, tau_grid);
  VerifyReport report("inequality_lemmas", kPolyTolerance);
  const std::vector<double> tau = refined_unit_grid(tau_grid);
  std::vector<double> wide = tau;
  if (negative_control) {
    for (int i = 1; i < tau_grid; ++i) wide.push_back(1.0 + static_cast<double>(i) / (tau_grid - 1));
  }

  for (int p = 0; p <= p_max; ++p) {
    for (double nu : nu_grid) {
      if (!(nu >= 0.0 && nu <= 1.0)) throw DomainError("nu must lie in [0, 1]");
      const RealPoly g = RealPoly::member(p, p + nu);
      const RealPoly dg = g.derivative();
      const RealPoly s = RealPoly::member(p, p - 2 + nu);
      const double pn = p + nu;

      // (i)
      for (double t : wide) {
        report.check_le("g_ge_tau_derivative", {{"p", p}, {"nu", nu}, {"tau", t}}, t * dg(t), g(t),
                        g.magnitude(t) + t * dg.magnitude(t));
      }

      // (ii)
      for (double t1 : tau) {
        const double rhs = nu * (g(t1) - t1 * dg(t1));
        const double rhs_scale = nu * (g.magnitude(t1) + t1 * dg.magnitude(t1));
        for (double t2 : tau) {
          if (t2 < t1 && !negative_control) continue;
          report.check_le("two_point", {{"p", p}, {"nu", nu}, {"tau1", t1}, {"tau2", t2}},
                          pn * s(t2), rhs, pn * s.magnitude(t2) + rhs_scale);
        }
      }

      // (iii)
      for (double t2 : tau) {
        if (!(t2 > 0.0)) continue;
        const double c = pn * s(t2);
        const double c_scale = pn * s.magnitude(t2);
        double prev = 0.0;
        double prev_scale = 0.0;
        double prev_t = 0.0;
        bool first = true;
        for (double t1 : tau) {
          if (!(t1 > 0.0)) continue;
          if (t1 > t2 && !negative_control) break;
          const double h = (nu * g(t1) - c) / t1;
          const double h_scale = (nu * g.magnitude(t1) + c_scale) / t1;
          if (!first) {
            report.check_le("auxiliary_decreasing",
                            {{"p", p}, {"nu", nu}, {"tau1", t1}, {"tau1_prev", prev_t}, {"tau2", t2}},
                            h, prev, std::max(prev_scale, h_scale));
          }
          prev = h;
          prev_scale = h_scale;
          prev_t = t1;
          first = false;
        }
      }

      // (iv)
      for (double t : tau) {
        const double factor = 1.0 - std::pow(1.0 - t, 1.0 - nu);
        report.check_le("shifted_lower_bound", {{"p", p}, {"nu", nu}, {"tau", t}},
                        -factor * dg(t), pn * s(t), dg.magnitude(t) + pn * s.magnitude(t));
      }
    }
  }
  return report;
}

}  // namespace normpow
