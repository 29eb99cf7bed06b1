#include "normpow/qpoly.hpp"

#include <algorithm>
#include <sstream>

namespace normpow {

namespace {

// Row n of Pascal's triangle.
std::vector<BigInt> binomial_row(std::size_t n) {
  std::vector<BigInt> row(n + 1);
  row[0] = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    row[k] = row[k - 1] * (n - k + 1) / k;
  }
  return row;
}

}  // namespace

QPoly::QPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { canonicalize(); }

QPoly QPoly::constant(BigInt c) { return QPoly({std::move(c)}); }

QPoly QPoly::linear(BigInt c0, BigInt c1) { return QPoly({std::move(c0), std::move(c1)}); }

void QPoly::canonicalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) {
    coeffs_.pop_back();
  }
}

BigInt QPoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }

QPoly QPoly::operator-() const {
  QPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

QPoly& QPoly::operator+=(const QPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  canonicalize();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  canonicalize();
  return *this;
}

QPoly& QPoly::operator*=(const BigInt& scalar) {
  if (scalar == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return QPoly(std::move(out));
}

QPoly QPoly::shifted(long delta) const {
  if (delta == 0 || coeffs_.size() <= 1) return *this;
  const std::size_t n = coeffs_.size();
  std::vector<BigInt> delta_pow(n);
  delta_pow[0] = 1;
  for (std::size_t i = 1; i < n; ++i) delta_pow[i] = delta_pow[i - 1] * delta;

  // a_i (q + d)^i = a_i sum_j C(i, j) d^(i-j) q^j
  std::vector<BigInt> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (coeffs_[i] == 0) continue;
    const auto row = binomial_row(i);
    for (std::size_t j = 0; j <= i; ++j) {
      out[j] += coeffs_[i] * row[j] * delta_pow[i - j];
    }
  }
  return QPoly(std::move(out));
}

BigInt QPoly::evaluate(const BigInt& q) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * q + *it;
  return acc;
}

double QPoly::evaluate(double q) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * q + it->convert_to<double>();
  }
  return acc;
}

std::vector<double> QPoly::to_doubles() const {
  std::vector<double> out(coeffs_.size());
  std::transform(coeffs_.begin(), coeffs_.end(), out.begin(),
                 [](const BigInt& c) { return c.convert_to<double>(); });
  return out;
}

std::string QPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const BigInt& c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    const BigInt mag = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << "*";
    os << "q";
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

}  // namespace normpow
