#include "normpow/constants.hpp"
#include "normpow/error.hpp"
#include "normpow/normcalc.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <Eigen/QR>

#include <random>
#include <vector>

using namespace normpow;

namespace {

Vector vec(std::initializer_list<double> v) {
  Vector out(static_cast<Eigen::Index>(v.size()));
  Eigen::Index i = 0;
  for (double x : v) out(i++) = x;
  return out;
}

Vector random_unit(const Metric& m, std::mt19937_64& rng) {
  std::normal_distribution<double> n;
  Vector z(m.dim());
  for (Eigen::Index i = 0; i < z.size(); ++i) z(i) = n(rng);
  Vector h = m.from_whitened(z);
  return h / m.norm(h);
}

Metric random_spd(int dim, std::mt19937_64& rng) {
  std::normal_distribution<double> n;
  Matrix a(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) a(i, j) = n(rng);
  }
  return Metric(a * a.transpose() + 0.5 * Matrix::Identity(dim, dim));
}

}  // namespace

TEST_SUITE("normcalc") {

TEST_CASE("make_metric examples") {
  const Metric id = make_metric(std::vector<std::vector<double>>{{1, 0}, {0, 1}});
  CHECK(id.norm(vec({3, 4})) == doctest::Approx(5.0));
  const Metric d = make_metric(std::vector<std::vector<double>>{{4, 0}, {0, 1}});
  CHECK(d.norm(vec({1, 0})) == doctest::Approx(2.0));
  CHECK_THROWS_AS(make_metric(std::vector<std::vector<double>>{{1, 2}, {2, 1}}), NotPositiveDefinite);
  CHECK_THROWS_AS(make_metric(std::vector<std::vector<double>>{{1, 0.5}, {0.4, 1}}), NotSymmetric);
  CHECK_THROWS_AS(make_metric(std::vector<std::vector<double>>{{1, 0}}), DimensionMismatch);
  CHECK(id.norm(Vector::Zero(2)) == 0.0);

  try {
    make_metric(std::vector<std::vector<double>>{{1, 2}, {2, 1}});
  } catch (const NotPositiveDefinite& e) {
    CHECK(std::string(e.what()).find("-1") != std::string::npos);
  }
}

TEST_CASE("from_whitened produces B-unit vectors from Euclidean-unit ones") {
  std::mt19937_64 rng(3);
  const Metric m = random_spd(4, rng);
  const Vector u = vec({0.6, 0.0, 0.8, 0.0});
  CHECK(m.norm(m.from_whitened(u)) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("tau examples") {
  const Metric m = Metric::identity(2);
  CHECK(tau(m, vec({3, 4}), vec({1, 0})) == doctest::Approx(0.6));
  const Vector h = vec({0.6, 0.8});
  CHECK(tau(m, h, h) == 1.0);
  CHECK(tau(m, Vector::Zero(2), h) == 0.0);
  CHECK_THROWS_AS(tau(m, vec({1, 1}), vec({1, 1})), NonUnitDirection);
  CHECK_THROWS_AS(tau(m, vec({1, 1, 1}), h), DimensionMismatch);
}

TEST_CASE("deriv_diag examples") {
  const Metric m = Metric::identity(2);
  CHECK(deriv_diag(m, 1, 2.0, vec({3, 4}), vec({1, 0})) == doctest::Approx(6.0));
  std::mt19937_64 rng(11);
  for (int i = 0; i < 5; ++i) {
    const Vector x = 3.0 * random_unit(m, rng);
    CHECK(deriv_diag(m, 2, 2.0, x, random_unit(m, rng)) == doctest::Approx(2.0).epsilon(1e-13));
  }
  const Vector h = vec({0.6, 0.8});
  CHECK(deriv_diag(m, 3, 3.0, h, h) == doctest::Approx(6.0).epsilon(1e-14));
  CHECK(deriv_diag(m, 2, 2.5, Vector::Zero(2), h) == 0.0);
  CHECK_THROWS_AS(deriv_diag(m, 3, 3.0, Vector::Zero(2), h), UndefinedAtOrigin);
  CHECK_THROWS_AS(deriv_diag(m, 2, 2.0, Vector::Zero(2), h), UndefinedAtOrigin);
}

TEST_CASE("deriv_diag is p-homogeneous in h") {
  std::mt19937_64 rng(5);
  const Metric m = random_spd(3, rng);
  const Vector x = random_unit(m, rng) * 1.7;
  const Vector h = random_unit(m, rng);
  for (int p = 0; p <= 5; ++p) {
    const double base = deriv_diag(m, p, p + 0.5, x, h);
    CHECK(deriv_diag(m, p, p + 0.5, x, 2.5 * h) ==
          doctest::Approx(std::pow(2.5, p) * base).epsilon(1e-12));
  }
  CHECK(deriv_diag(m, 2, 2.5, x, Vector::Zero(3)) == 0.0);
}

TEST_CASE("deriv_diag agrees with the numeric recursion oracle") {
  std::mt19937_64 rng(21);
  const Metric m = random_spd(3, rng);
  for (int p = 0; p <= 7; ++p) {
    const double q = p + 0.3;
    const Vector x = random_unit(m, rng) * 0.8;
    const Vector h = random_unit(m, rng);
    const double t = m.inner(x, h) / m.norm(x);
    const double expected = std::pow(m.norm(x), q - p) * oracle::g(p, q, t);
    CHECK(oracle::rel_err(deriv_diag(m, p, q, x, h), expected) <= 1e-12);
  }
}

TEST_CASE("deriv_mixed examples and invariants") {
  std::mt19937_64 rng(8);
  const Metric m = random_spd(3, rng);
  const Vector x = random_unit(m, rng) * 1.3;
  const Vector h1 = random_unit(m, rng);
  const Vector h2 = random_unit(m, rng);
  const Vector h3 = random_unit(m, rng);

  std::vector<Vector> d2 = {h1, h2};
  CHECK(deriv_mixed(m, 2, 2.0, x, d2) == doctest::Approx(2.0 * m.inner(h1, h2)).epsilon(1e-12));
  std::vector<Vector> d2s = {h2, h1};
  CHECK(deriv_mixed(m, 2, 2.7, x, d2) == doctest::Approx(deriv_mixed(m, 2, 2.7, x, d2s)).epsilon(1e-12));

  for (int p = 1; p <= 5; ++p) {
    std::vector<Vector> same(static_cast<std::size_t>(p), h1);
    CHECK(oracle::rel_err(deriv_mixed(m, p, p + 0.5, x, same), deriv_diag(m, p, p + 0.5, x, h1)) <=
          1e-10);
  }

  std::vector<Vector> dirs = {h1, h2, h3};
  const double base = deriv_mixed(m, 3, 3.5, x, dirs);
  std::vector<int> perm = {0, 1, 2};
  while (std::next_permutation(perm.begin(), perm.end())) {
    std::vector<Vector> permuted = {dirs[static_cast<std::size_t>(perm[0])],
                                    dirs[static_cast<std::size_t>(perm[1])],
                                    dirs[static_cast<std::size_t>(perm[2])]};
    CHECK(std::abs(deriv_mixed(m, 3, 3.5, x, permuted) - base) <= 1e-10 * std::max(1.0, std::abs(base)));
  }

  CHECK_THROWS_AS(deriv_mixed(m, 3, 3.5, x, d2), ArgumentCountMismatch);
  CHECK_THROWS_AS(deriv_mixed(m, 2, 3.5, Vector::Zero(3), d2), UndefinedAtOrigin);
}

TEST_CASE("fd_oracle examples") {
  const Metric m = Metric::identity(2);
  CHECK(std::abs(fd_oracle(m, 1, 2.0, vec({3, 4}), vec({1, 0}), 1e-5) - 6.0) <= 1e-8);
  CHECK_THROWS_AS(fd_oracle(m, 1, 2.0, vec({1e-6, 0}), vec({1, 0}), 2e-6), StencilHitsOrigin);
  CHECK_THROWS_AS(fd_oracle(m, 5, 6.0, vec({1, 0}), vec({1, 0})), DomainError);
  CHECK_THROWS_AS(fd_oracle(m, 1, 2.0, vec({1, 0}), vec({1, 0}), 0.0), DomainError);

  std::mt19937_64 rng(13);
  const Metric b = random_spd(3, rng);
  for (int i = 0; i < 10; ++i) {
    const Vector x = random_unit(b, rng);
    const Vector h = random_unit(b, rng);
    const double d2 = deriv_diag(b, 2, 2.5, x, h);
    CHECK(std::abs(fd_oracle(b, 2, 2.5, x, h) - d2) <= 1e-5 * std::max(1.0, std::abs(d2)));
    const double d3 = deriv_diag(b, 3, 3.5, x, h);
    CHECK(std::abs(fd_oracle(b, 3, 3.5, x, h, 1e-3) - d3) <= 1e-3 * std::max(1.0, std::abs(d3)));
  }
}

TEST_CASE("closed form agrees with finite differences") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> radius(0.5, 2.0);
  const Metric m = random_spd(3, rng);
  for (int p = 1; p <= 3; ++p) {
    for (double nu : {0.25, 0.5, 0.75, 1.0}) {
      const double q = p + nu;
      for (int i = 0; i < 100; ++i) {
        const Vector x = radius(rng) * random_unit(m, rng);
        const Vector h = random_unit(m, rng);
        const double exact = deriv_diag(m, p, q, x, h);
        const double fd = fd_oracle(m, p, q, x, h);
        CHECK(std::abs(exact - fd) / (1.0 + std::abs(exact)) <= (p <= 2 ? 1e-4 : 1e-3));
      }
    }
  }
}

TEST_CASE("homogeneity in x") {
  std::mt19937_64 rng(19);
  const Metric m = random_spd(3, rng);
  for (int p = 0; p <= 5; ++p) {
    const double q = p + 0.6;
    const Vector x = random_unit(m, rng);
    const Vector h = random_unit(m, rng);
    for (double lambda : {0.01, 0.5, 3.0, 100.0}) {
      CHECK(oracle::rel_err(deriv_diag(m, p, q, lambda * x, h),
                            std::pow(lambda, q - p) * deriv_diag(m, p, q, x, h)) <= 1e-10);
    }
  }
}

TEST_CASE("rotation invariance under B = I") {
  std::mt19937_64 rng(23);
  std::normal_distribution<double> n;
  Matrix a(4, 4);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) a(i, j) = n(rng);
  }
  const Matrix rot = Eigen::HouseholderQR<Matrix>(a).householderQ();
  const Metric m = Metric::identity(4);
  for (int p = 0; p <= 5; ++p) {
    const Vector x = random_unit(m, rng) * 1.4;
    const Vector h = random_unit(m, rng);
    const double base = deriv_diag(m, p, p + 0.5, x, h);
    CHECK(std::abs(deriv_diag(m, p, p + 0.5, rot * x, rot * h) - base) <=
          1e-10 * std::max(1.0, std::abs(base)));
  }
}

TEST_CASE("tensor_diff_norm_lb examples") {
  std::mt19937_64 rng(29);
  const Metric m = random_spd(3, rng);
  const Vector x2 = random_unit(m, rng) * 1.9;

  // gradient difference of ||x||^2 is linear: norm 2 ||x2||
  const NormEstimate lin = tensor_diff_norm_lb(m, 1, 1.0, Vector::Zero(3), x2);
  CHECK(std::abs(lin.value - 2.0 * m.norm(x2)) <= 1e-8);

  CHECK(tensor_diff_norm_lb(m, 3, 0.5, x2, x2).value == 0.0);

  const Vector h0 = random_unit(m, rng);
  const NormEstimate odd = tensor_diff_norm_lb(m, 3, 0.5, -h0, h0);
  CHECK(odd.value == doctest::Approx(26.25).epsilon(1e-10));
  CHECK(std::abs(std::abs(m.inner(odd.direction, h0)) - 1.0) <= 1e-6);
  CHECK(odd.value / std::pow(2.0, 0.5) == doctest::Approx(lower_bound_C(3, 0.5)).epsilon(1e-10));

  // p = 0: | ||x2||^nu - ||x1||^nu |
  const Vector x1 = random_unit(m, rng) * 0.3;
  CHECK(tensor_diff_norm_lb(m, 0, 0.5, x1, x2).value ==
        doctest::Approx(std::abs(std::pow(m.norm(x2), 0.5) - std::pow(m.norm(x1), 0.5))));

  NormSearchOptions bad;
  bad.starts = 0;
  CHECK_THROWS_AS(tensor_diff_norm_lb(m, 2, 0.5, x1, x2, bad), DomainError);
  CHECK_THROWS_AS(tensor_diff_norm_lb(m, 2, 1.5, x1, x2), DomainError);
  CHECK_THROWS_AS(tensor_diff_norm_lb(m, 2, 0.0, Vector::Zero(3), x2), UndefinedAtOrigin);
}

TEST_CASE("tensor_diff_norm_lb is deterministic and a lower bound of the max over samples") {
  std::mt19937_64 rng(31);
  const Metric m = random_spd(3, rng);
  const Vector x1 = random_unit(m, rng) * 0.7;
  const Vector x2 = random_unit(m, rng) * 1.2;
  const NormEstimate a = tensor_diff_norm_lb(m, 4, 0.5, x1, x2);
  const NormEstimate b = tensor_diff_norm_lb(m, 4, 0.5, x1, x2);
  CHECK(a.value == b.value);
  CHECK(a.direction == b.direction);
  CHECK(m.norm(a.direction) == doctest::Approx(1.0).epsilon(1e-12));

  // The ascent result beats any of many random directions.
  const PowerDerivative d(4, 4.5);
  double sampled = 0.0;
  for (int i = 0; i < 2000; ++i) {
    const Vector h = random_unit(m, rng);
    sampled = std::max(sampled, std::abs(d.diag_unit(m, x2, h) - d.diag_unit(m, x1, h)));
  }
  CHECK(a.value >= sampled * (1.0 - 1e-12));
  CHECK(a.value <= constant_A_tilde(4, 0.5) * std::pow(m.norm(x2 - x1), 0.5) * (1.0 + 1e-9));
}

TEST_CASE("derive_seed spreads indices") {
  CHECK(derive_seed(1, 0) != derive_seed(1, 1));
  CHECK(derive_seed(1, 0) != derive_seed(2, 0));
  CHECK(derive_seed(42, 7) == derive_seed(42, 7));
}

}  // TEST_SUITE
