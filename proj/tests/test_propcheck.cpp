#include "normpow/constants.hpp"
#include "normpow/error.hpp"
#include "normpow/propcheck.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>

using namespace normpow;

namespace {

bool has_violation(const VerifyReport& r, const std::string& check,
                   std::vector<std::pair<std::string, double>> want) {
  for (const auto& v : r.violations()) {
    if (v.check != check) continue;
    bool all = true;
    for (const auto& [k, val] : want) {
      const auto it = std::find_if(v.params.begin(), v.params.end(),
                                   [&](const auto& kv) { return kv.first == k; });
      if (it == v.params.end() || std::abs(it->second - val) > 1e-12) all = false;
    }
    if (all) return true;
  }
  return false;
}

}  // namespace

TEST_SUITE("propcheck") {

TEST_CASE("VerifyReport margins and merging") {
  VerifyReport a("s", 1e-10, 3);
  a.check_le("c", {{"i", 1}}, 1.0, 2.0);
  a.check_le("c", {{"i", 2}}, 2.0, 1.0);
  a.check_le("c", {{"i", 3}}, 1.0 + 1e-12, 1.0);
  CHECK(a.cases_run() == 3);
  CHECK(a.violations().size() == 1);
  CHECK(a.worst_margin() == doctest::Approx(-1.0));
  CHECK_FALSE(a.passed());

  // scale normalizes the slack
  VerifyReport s("s", 1e-10);
  s.check_le("c", {}, 1e6 + 1e-5, 1e6, 1e6);
  CHECK(s.passed());

  VerifyReport b("s", 1e-10, 3);
  b.check_le("c", {{"i", 0}}, 5.0, 1.0);
  VerifyReport c("s", 1e-10, 3);
  c.check_le("d", {{"i", 0}}, 3.0, 1.0);

  VerifyReport ab_c = a;
  ab_c.merge(b);
  ab_c.merge(c);
  VerifyReport bc = b;
  bc.merge(c);
  VerifyReport a_bc = a;
  a_bc.merge(bc);
  VerifyReport c_b_a = c;
  c_b_a.merge(b);
  c_b_a.merge(a);
  CHECK(ab_c.violations() == a_bc.violations());
  CHECK(ab_c.violations() == c_b_a.violations());
  CHECK(ab_c.cases_run() == 5);
  CHECK(ab_c.to_json().dump() == a_bc.to_json().dump());
  CHECK(std::is_sorted(ab_c.violations().begin(), ab_c.violations().end()));

  VerifyReport n("s", 1e-10);
  n.check_le("nan", {}, std::nan(""), 1.0);
  CHECK_FALSE(n.passed());
  CHECK(n.to_json()["worst_margin"].is_null());

  VerifyReport other("t", 1e-10);
  CHECK_THROWS_AS(a.merge(other), std::invalid_argument);
}

TEST_CASE("refined grid covers the endpoints densely") {
  const auto t = refined_unit_grid(101);
  CHECK(t.front() == 0.0);
  CHECK(t.back() == 1.0);
  CHECK(std::is_sorted(t.begin(), t.end()));
  CHECK(std::find(t.begin(), t.end(), 1e-8) != t.end());
  CHECK(std::find(t.begin(), t.end(), 1.0 - 1e-8) != t.end());
  CHECK_THROWS_AS(refined_unit_grid(1), DomainError);
}

TEST_CASE("nonnegativity") {
  CHECK(check_nonnegativity(8, 501).passed());
  CHECK(check_nonnegativity(0, 11).passed());
  const VerifyReport neg = check_nonnegativity(8, 101, true);
  CHECK_FALSE(neg.passed());
  CHECK(has_violation(neg, "nonnegativity", {{"p", 1}, {"q", -1}}));
}

TEST_CASE("monotonicity") {
  CHECK(check_monotonicity(8, 501).passed());
  const VerifyReport neg = check_monotonicity(8, 101, true);
  CHECK_FALSE(neg.passed());
  CHECK(has_violation(neg, "monotonicity", {{"p", 1}, {"q", -1}}));
}

TEST_CASE("max_abs") {
  CHECK(check_max_abs(8, 501).passed());
  CHECK(check_max_abs(0, 11).passed());
  CHECK_FALSE(check_max_abs(8, 101, true).passed());
}

TEST_CASE("fraction_monotone") {
  const auto nus = default_nu_grid();
  CHECK(check_fraction_monotone(8, nus, 101).passed());
  const std::vector<double> one = {1.0};
  CHECK(check_fraction_monotone(1, one, 101).passed());
  const std::vector<double> quarter = {0.25};
  CHECK(check_fraction_monotone(3, quarter, 501).passed());
  CHECK_FALSE(check_fraction_monotone(4, nus, 101, true).passed());
  const std::vector<double> bad = {1.5};
  CHECK_THROWS_AS(check_fraction_monotone(2, bad, 101), DomainError);
}

TEST_CASE("inequality lemmas") {
  const auto nus = default_nu_grid();
  const VerifyReport r = check_inequality_lemmas(6, nus, 101);
  CHECK(r.passed());
  CHECK(r.cases_run() > 0);
  const std::vector<double> half = {0.5};
  CHECK(check_inequality_lemmas(1, half, 51).passed());
  const VerifyReport neg = check_inequality_lemmas(4, nus, 101, true);
  CHECK_FALSE(neg.passed());
  bool i_hit = false;
  bool ii_hit = false;
  bool iii_hit = false;
  for (const auto& v : neg.violations()) {
    i_hit = i_hit || v.check == "g_ge_tau_derivative";
    ii_hit = ii_hit || v.check == "two_point";
    iii_hit = iii_hit || v.check == "auxiliary_decreasing";
  }
  CHECK(i_hit);
  CHECK(ii_hit);
  CHECK(iii_hit);
}

TEST_CASE("suites are deterministic") {
  const auto nus = default_nu_grid();
  CHECK(check_inequality_lemmas(3, nus, 51).to_json().dump() ==
        check_inequality_lemmas(3, nus, 51).to_json().dump());
  const Metric m = Metric::identity(3);
  const auto a = sample_tensor_holder(m, 2, 0.5, SampleMode::general, 200, 99);
  const auto b = sample_tensor_holder(m, 2, 0.5, SampleMode::general, 200, 99);
  CHECK(a.report.to_json().dump() == b.report.to_json().dump());
  CHECK(a.max_ratio == b.max_ratio);
  CHECK(a.witness_x1 == b.witness_x1);
}

TEST_CASE("construction mode attains C") {
  const Metric m = Metric::identity(3);
  const auto odd = sample_tensor_holder(m, 3, 0.5, SampleMode::construction, 50, 1);
  CHECK(odd.report.passed());
  CHECK(odd.max_ratio == doctest::Approx(lower_bound_C(3, 0.5)).epsilon(1e-6));
  CHECK(odd.max_ratio == doctest::Approx(18.56155).epsilon(1e-6));

  const auto even = sample_tensor_holder(m, 2, 0.5, SampleMode::construction, 50, 1);
  CHECK(even.report.passed());
  CHECK(even.max_ratio == doctest::Approx(3.75).epsilon(1e-6));

  CHECK_THROWS_AS(sample_tensor_holder(m, 2, 0.0, SampleMode::construction, 5, 1), DomainError);

  const auto neg = sample_tensor_holder(m, 3, 0.5, SampleMode::construction, 20, 1,
                                        sampling_search_options(), true);
  CHECK_FALSE(neg.report.passed());
}

TEST_CASE("collinear and general modes stay below their bounds") {
  const Metric m = Metric::identity(3);
  for (int p = 1; p <= 4; ++p) {
    const auto col = sample_tensor_holder(m, p, 0.5, SampleMode::collinear, 400, 5);
    CHECK(col.report.passed());
    CHECK(col.max_ratio <= lower_bound_C(p, 0.5) * (1.0 + 1e-9));
    if (p % 2 == 1) {
      CHECK(col.opposite_max_ratio == doctest::Approx(lower_bound_C(p, 0.5)).epsilon(1e-6));
    }
    const auto gen = sample_tensor_holder(m, p, 0.5, SampleMode::general, 400, 5);
    CHECK(gen.report.passed());
    CHECK(gen.max_ratio <= constant_A_tilde(p, 0.5) * (1.0 + 1e-9));
    CHECK(gen.max_ratio > 0.0);
  }
}

TEST_CASE("general sampling with a non-identity metric") {
  Matrix b(3, 3);
  b << 3.0, 0.5, 0.0, 0.5, 2.0, 0.3, 0.0, 0.3, 1.0;
  const Metric m(b);
  const auto gen = sample_tensor_holder(m, 2, 0.75, SampleMode::general, 300, 8);
  CHECK(gen.report.passed());
  const auto con = sample_tensor_holder(m, 3, 0.25, SampleMode::construction, 30, 8);
  CHECK(con.report.passed());
}

TEST_CASE("sample mode names") {
  for (auto mode : {SampleMode::general, SampleMode::collinear, SampleMode::construction}) {
    CHECK(parse_sample_mode(sample_mode_name(mode)) == mode);
  }
  CHECK_THROWS_AS(parse_sample_mode("diagonal"), std::invalid_argument);
}

}  // TEST_SUITE
