#include "normpow/error.hpp"
#include "normpow/polyfamily.hpp"

#include <sstream>

namespace normpow {

namespace {

struct FirstDifference {
  std::size_t tau_power = 0;
  std::size_t q_power = 0;
  BigInt lhs;
  BigInt rhs;
};

std::optional<FirstDifference> first_difference(const BiPoly& lhs, const BiPoly& rhs) {
  if (lhs == rhs) return std::nullopt;
  const std::size_t n = std::max(lhs.tau_coeffs().size(), rhs.tau_coeffs().size());
  for (std::size_t k = 0; k < n; ++k) {
    const QPoly& a = lhs.coeff(k);
    const QPoly& b = rhs.coeff(k);
    if (a == b) continue;
    const std::size_t m = std::max(a.coeffs().size(), b.coeffs().size());
    for (std::size_t i = 0; i < m; ++i) {
      if (a.coeff(i) != b.coeff(i)) return FirstDifference{k, i, a.coeff(i), b.coeff(i)};
    }
  }
  return std::nullopt;  // unreachable for canonical forms
}

class IdentityChecker {
 public:
  explicit IdentityChecker(VerifyReport& report) : report_(report) {}

  void compare(const std::string& name, int p, const BiPoly& lhs, const BiPoly& rhs) {
    const auto diff = first_difference(lhs, rhs);
    if (!diff) {
      report_.check_exact(name, {{"p", p}}, true, 0.0, 0.0);
      return;
    }
    std::ostringstream detail;
    detail << "first difference at tau^" << diff->tau_power << " q^" << diff->q_power
           << ": lhs=" << diff->lhs << " rhs=" << diff->rhs;
    report_.check_exact(name,
                        {{"p", p},
                         {"tau_power", static_cast<double>(diff->tau_power)},
                         {"q_power", static_cast<double>(diff->q_power)}},
                        false, diff->lhs.convert_to<double>(), diff->rhs.convert_to<double>(),
                        detail.str());
  }

  void compare_q(const std::string& name, int p, const QPoly& lhs, const QPoly& rhs) {
    compare(name, p, BiPoly({lhs}), BiPoly({rhs}));
  }

 private:
  VerifyReport& report_;
};

QPoly q_minus(int c) { return QPoly::linear(BigInt(-c), BigInt(1)); }

const QPoly& q_poly() {
  static const QPoly q = QPoly::linear(BigInt(0), BigInt(1));
  return q;
}

}  // namespace

const std::vector<std::string>& identity_names() {
  static const std::vector<std::string> names = {
      "recursion",
      "derivative_with_second_derivative",
      "q_shift",
      "derivative_with_shifted_q",
      "derivative_shift",
      "derivative_free_recursion",
      "parity",
      "boundary_value_at_zero",
      "boundary_value_at_one",
  };
  return names;
}

VerifyReport check_identity_suite(const std::vector<GPoly>& family) {
  VerifyReport report("identities", 0.0);
  IdentityChecker check(report);
  for (std::size_t idx = 0; idx < family.size(); ++idx) {
    if (family[idx].p != static_cast<int>(idx)) {
      throw DomainError("family element " + std::to_string(idx) + " carries p=" +
                        std::to_string(family[idx].p));
    }
  }

  for (std::size_t idx = 0; idx < family.size(); ++idx) {
    const int p = static_cast<int>(idx);
    const BiPoly& g = family[idx].poly;
    const BiPoly dg = g.derivative();
    const QPoly& q = q_poly();

    if (p == 0) {
      check.compare("recursion", p, g, BiPoly::one());
    } else {
      const BiPoly& prev = family[idx - 1].poly;
      const BiPoly dprev = prev.derivative();
      const BiPoly ddprev = dprev.derivative();

      // g_p = (1 - t^2) g'_{p-1} + (q - p + 1) t g_{p-1}
      check.compare("recursion", p, g,
                    dprev.times_one_minus_tau_sq() + prev.times_tau() * q_minus(p - 1));

      // g'_p = (1 - t^2) g''_{p-1} + (q - p - 1) t g'_{p-1} + (q - p + 1) g_{p-1}
      check.compare("derivative_with_second_derivative", p, dg,
                    ddprev.times_one_minus_tau_sq() + dprev.times_tau() * q_minus(p + 1) +
                        prev * q_minus(p - 1));

      // g'_p = (1 - t^2) g''_{p-1} + (q - p) t g'_{p-1} + q g_{p-1,q-2}
      check.compare("derivative_with_shifted_q", p, dg,
                    ddprev.times_one_minus_tau_sq() + dprev.times_tau() * q_minus(p) +
                        prev.shift_q(-2) * q);

      // g'_p = p q g_{p-1,q-2}
      check.compare("derivative_shift", p, dg, prev.shift_q(-2) * (q * BigInt(p)));
    }

    // (q - p) g_p = t g'_p + q g_{p,q-2}
    check.compare("q_shift", p, g * q_minus(p), dg.times_tau() + g.shift_q(-2) * q);

    if (p >= 2) {
      // g_p = (1 - t^2)(p - 1) q g_{p-2,q-2} + (q - p + 1) t g_{p-1}
      const BiPoly& prev = family[idx - 1].poly;
      const BiPoly& prev2 = family[idx - 2].poly;
      check.compare("derivative_free_recursion", p, g,
                    prev2.shift_q(-2).times_one_minus_tau_sq() * (q * BigInt(p - 1)) +
                        prev.times_tau() * q_minus(p - 1));
    }

    // Coefficients of tau-powers with the wrong parity vanish.
    std::vector<QPoly> wrong_parity;
    for (std::size_t k = 0; k < g.tau_coeffs().size(); ++k) {
      wrong_parity.push_back((static_cast<int>(k) - p) % 2 != 0 ? g.coeff(k) : QPoly{});
    }
    check.compare("parity", p, BiPoly(std::move(wrong_parity)), BiPoly{});

    check.compare_q("boundary_value_at_zero", p, g.at_tau_zero(), closed_form_value_at_zero(p));
    check.compare_q("boundary_value_at_one", p, g.at_tau_one(), closed_form_value_at_one(p));
  }
  return report;
}

VerifyReport check_identity_suite(int p_max) {
  if (p_max < 1) throw DomainError("identity suite needs p_max >= 1");
  return check_identity_suite(generate_family(p_max));
}

}  // namespace normpow
