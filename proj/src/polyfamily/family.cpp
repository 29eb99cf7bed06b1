#include "normpow/error.hpp"
#include "normpow/polyfamily.hpp"

#include <deque>
#include <mutex>

namespace normpow {

namespace {

GPoly next_member(const GPoly& prev) {
  const int p = prev.p + 1;
  // (q - p + 1) as a polynomial in q
  const QPoly factor = QPoly::linear(BigInt(1 - p), BigInt(1));
  BiPoly next = prev.poly.derivative().times_one_minus_tau_sq() + prev.poly.times_tau() * factor;
  return {p, std::move(next)};
}

struct CachedMember {
  GPoly exact;
  std::vector<std::vector<double>> q_coeffs;  // double copy of each tau-coefficient
};

class FamilyCache {
 public:
  const CachedMember& get(int p) {
    if (p < 0) throw DomainError("family index must be non-negative, got " + std::to_string(p));
    std::lock_guard lock(mutex_);
    if (members_.empty()) push(GPoly{0, BiPoly::one()});
    while (static_cast<int>(members_.size()) <= p) push(next_member(members_.back().exact));
    // deque never relocates existing elements on push_back
    return members_[static_cast<std::size_t>(p)];
  }

 private:
  void push(GPoly g) {
    CachedMember m;
    for (const auto& c : g.poly.tau_coeffs()) m.q_coeffs.push_back(c.to_doubles());
    m.exact = std::move(g);
    members_.push_back(std::move(m));
  }

  std::mutex mutex_;
  std::deque<CachedMember> members_;
};

FamilyCache& cache() {
  static FamilyCache instance;
  return instance;
}

}  // namespace

std::vector<GPoly> generate_family(int p_max) {
  if (p_max < 0) throw DomainError("p_max must be non-negative, got " + std::to_string(p_max));
  std::vector<GPoly> family;
  family.reserve(static_cast<std::size_t>(p_max) + 1);
  family.push_back({0, BiPoly::one()});
  for (int p = 1; p <= p_max; ++p) family.push_back(next_member(family.back()));
  return family;
}

const GPoly& family_member(int p) { return cache().get(p).exact; }

std::vector<double> specialize_member(int p, double q) {
  const auto& member = cache().get(p);
  std::vector<double> out(member.q_coeffs.size());
  for (std::size_t k = 0; k < out.size(); ++k) {
    const auto& c = member.q_coeffs[k];
    double acc = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * q + *it;
    out[k] = acc;
  }
  return out;
}

std::pair<QPoly, QPoly> boundary_values(int p) {
  const auto& g = family_member(p).poly;
  return {g.at_tau_zero(), g.at_tau_one()};
}

BigInt double_factorial(int n) {
  BigInt r = 1;
  for (int k = n; k > 1; k -= 2) r *= k;
  return r;
}

BigInt factorial(int n) {
  if (n < 0) throw DomainError("factorial of a negative number");
  BigInt r = 1;
  for (int k = 2; k <= n; ++k) r *= k;
  return r;
}

QPoly closed_form_value_at_zero(int p) {
  if (p % 2 != 0) return {};
  QPoly prod = QPoly::constant(double_factorial(p - 1));
  for (int i = 0; i < p / 2; ++i) prod = prod * QPoly::linear(BigInt(-2 * i), BigInt(1));
  return prod;
}

QPoly closed_form_value_at_one(int p) {
  QPoly prod = QPoly::constant(1);
  for (int i = 0; i < p; ++i) prod = prod * QPoly::linear(BigInt(-i), BigInt(1));
  return prod;
}

}  // namespace normpow
