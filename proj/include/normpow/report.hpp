#pragma once

#include <nlohmann/json.hpp>

#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

namespace normpow {

struct Violation {
  /// Which check failed, e.g. "derivative_free_recursion" or "nonnegativity".
  std::string check;
  std::vector<std::pair<std::string, double>> params;
  double lhs = 0.0;
  double rhs = 0.0;
  /// Normalized slack (negative for a violation).
  double gap = 0.0;
  std::string detail;

  friend bool operator<(const Violation& a, const Violation& b);
  friend bool operator==(const Violation&, const Violation&) = default;
};

/// Pass/fail record of one property suite.
///
/// Every case is an inequality lhs <= rhs. Its margin is (rhs - lhs) divided
/// by max(1, scale), where scale is the floating-point magnitude of the terms
/// involved; a case is a violation iff margin < -tolerance. Hence the report
/// has no violations exactly when worst_margin >= -tolerance.
class VerifyReport {
 public:
  VerifyReport() = default;
  VerifyReport(std::string suite_name, double tolerance, std::uint64_t seed = 0);

  /// Records lhs <= rhs.
  void check_le(const std::string& check, std::vector<std::pair<std::string, double>> params,
                double lhs, double rhs, double scale = 1.0, std::string detail = {});
  /// Records an exact (integer) identity; margin is 0 when it holds.
  void check_exact(const std::string& check, std::vector<std::pair<std::string, double>> params,
                   bool holds, double lhs, double rhs, std::string detail = {});

  /// Combines two partial reports of the same suite (e.g. from two workers).
  /// Associative and order-independent: violations are kept sorted.
  void merge(const VerifyReport& other);

  const std::string& suite_name() const { return suite_name_; }
  std::uint64_t cases_run() const { return cases_run_; }
  /// Sorted.
  const std::vector<Violation>& violations() const;
  double worst_margin() const { return worst_margin_; }
  double tolerance() const { return tolerance_; }
  std::uint64_t seed() const { return seed_; }
  bool passed() const { return violations_.empty(); }

  nlohmann::ordered_json to_json() const;

 private:
  void add_violation(Violation v);
  void sort_violations() const;

  std::string suite_name_;
  double tolerance_ = 0.0;
  std::uint64_t seed_ = 0;
  std::uint64_t cases_run_ = 0;
  double worst_margin_ = std::numeric_limits<double>::infinity();
  // Appended unsorted; sorted on first read.
  mutable std::vector<Violation> violations_;
  mutable bool sorted_ = true;
};

}  // namespace normpow
