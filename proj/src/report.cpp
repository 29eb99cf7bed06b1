#include "normpow/report.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace normpow {

namespace {

// Total order on doubles: NaN sorts after everything and equals itself.
int compare(double a, double b) {
  const bool an = std::isnan(a);
  const bool bn = std::isnan(b);
  if (an || bn) return static_cast<int>(an) - static_cast<int>(bn);
  return (a > b) - (a < b);
}

int compare(const std::vector<std::pair<std::string, double>>& a,
            const std::vector<std::pair<std::string, double>>& b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (const int c = a[i].first.compare(b[i].first); c != 0) return c;
    if (const int c = compare(a[i].second, b[i].second); c != 0) return c;
  }
  return (a.size() > b.size()) - (a.size() < b.size());
}

}  // namespace

bool operator<(const Violation& a, const Violation& b) {
  if (const int c = a.check.compare(b.check); c != 0) return c < 0;
  if (const int c = compare(a.params, b.params); c != 0) return c < 0;
  if (const int c = compare(a.lhs, b.lhs); c != 0) return c < 0;
  if (const int c = compare(a.rhs, b.rhs); c != 0) return c < 0;
  return a.detail < b.detail;
}

VerifyReport::VerifyReport(std::string suite_name, double tolerance, std::uint64_t seed)
    : suite_name_(std::move(suite_name)), tolerance_(tolerance), seed_(seed) {}

void VerifyReport::add_violation(Violation v) {
  violations_.push_back(std::move(v));
  sorted_ = false;
}

void VerifyReport::sort_violations() const {
  if (sorted_) return;
  std::stable_sort(violations_.begin(), violations_.end());
  sorted_ = true;
}

const std::vector<Violation>& VerifyReport::violations() const {
  sort_violations();
  return violations_;
}

void VerifyReport::check_le(const std::string& check,
                            std::vector<std::pair<std::string, double>> params, double lhs,
                            double rhs, double scale, std::string detail) {
  ++cases_run_;
  double margin = (rhs - lhs) / std::max(1.0, std::abs(scale));
  if (std::isnan(margin)) margin = -std::numeric_limits<double>::infinity();
  worst_margin_ = std::min(worst_margin_, margin);
  if (margin < -tolerance_) {
    add_violation({check, std::move(params), lhs, rhs, margin, std::move(detail)});
  }
}

void VerifyReport::check_exact(const std::string& check,
                               std::vector<std::pair<std::string, double>> params, bool holds,
                               double lhs, double rhs, std::string detail) {
  ++cases_run_;
  if (holds) {
    worst_margin_ = std::min(worst_margin_, 0.0);
    return;
  }
  const double margin = -std::max(1.0, std::abs(lhs - rhs));
  worst_margin_ = std::min(worst_margin_, margin);
  add_violation({check, std::move(params), lhs, rhs, margin, std::move(detail)});
}

void VerifyReport::merge(const VerifyReport& other) {
  if (other.suite_name_ != suite_name_ || other.tolerance_ != tolerance_) {
    throw std::invalid_argument("cannot merge reports of different suites: " + suite_name_ +
                                " and " + other.suite_name_);
  }
  cases_run_ += other.cases_run_;
  worst_margin_ = std::min(worst_margin_, other.worst_margin_);
  sort_violations();
  other.sort_violations();
  std::vector<Violation> merged;
  merged.reserve(violations_.size() + other.violations_.size());
  std::merge(violations_.begin(), violations_.end(), other.violations_.begin(),
             other.violations_.end(), std::back_inserter(merged));
  violations_ = std::move(merged);
}

namespace {

nlohmann::ordered_json finite_or_null(double v) {
  if (std::isfinite(v)) return v;
  return nullptr;
}

}  // namespace

nlohmann::ordered_json VerifyReport::to_json() const {
  nlohmann::ordered_json j;
  j["suite"] = suite_name_;
  j["cases_run"] = cases_run_;
  j["tolerance"] = tolerance_;
  j["worst_margin"] = finite_or_null(worst_margin_);
  j["seed"] = seed_;
  j["passed"] = passed();
  auto& vs = j["violations"] = nlohmann::ordered_json::array();
  for (const auto& v : violations()) {
    nlohmann::ordered_json jv;
    jv["check"] = v.check;
    auto& params = jv["params"] = nlohmann::ordered_json::object();
    for (const auto& [name, value] : v.params) params[name] = finite_or_null(value);
    jv["lhs"] = finite_or_null(v.lhs);
    jv["rhs"] = finite_or_null(v.rhs);
    jv["gap"] = finite_or_null(v.gap);
    if (!v.detail.empty()) jv["detail"] = v.detail;
    vs.push_back(std::move(jv));
  }
  return j;
}

}  // namespace normpow
