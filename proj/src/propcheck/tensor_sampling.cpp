#include "normpow/constants.hpp"
#include "normpow/error.hpp"
#include "normpow/propcheck.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>

namespace normpow {

namespace {

constexpr double kRatioTolerance = 1e-9;
constexpr double kAttainTolerance = 1e-6;

Vector unit_direction(const Metric& metric, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  Vector z(metric.dim());
  for (;;) {
    for (Eigen::Index i = 0; i < z.size(); ++i) z(i) = normal(rng);
    Vector h = metric.from_whitened(z);
    const double n = metric.norm(h);
    if (n > 0.0) return h / n;
  }
}

double log_uniform_radius(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> exponent(-2.0, 2.0);
  return std::pow(10.0, exponent(rng));
}

double random_sign(std::mt19937_64& rng) {
  return std::bernoulli_distribution(0.5)(rng) ? 1.0 : -1.0;
}

}  // namespace

std::string_view sample_mode_name(SampleMode mode) {
  switch (mode) {
    case SampleMode::general: return "general";
    case SampleMode::collinear: return "collinear";
    case SampleMode::construction: return "construction";
  }
  return "general";
}

SampleMode parse_sample_mode(std::string_view name) {
  if (name == "general") return SampleMode::general;
  if (name == "collinear") return SampleMode::collinear;
  if (name == "construction") return SampleMode::construction;
  throw std::invalid_argument("unknown sampling mode: " + std::string(name));
}

NormSearchOptions sampling_search_options() {
  NormSearchOptions options;
  options.starts = 8;
  return options;
}

TensorSampleResult sample_tensor_holder(const Metric& metric, int p, double nu, SampleMode mode,
                                        int n_samples, std::uint64_t seed,
                                        const NormSearchOptions& search, bool negative_control) {
  if (n_samples < 1) throw DomainError("need at least one sample");
  if (p < 0) throw DomainError("p must be non-negative");
  if (!(nu >= 0.0 && nu <= 1.0)) throw DomainError("nu must lie in [0, 1]");
  const bool origin_x1 = (p % 2 == 0) != negative_control;
  if (mode == SampleMode::construction && origin_x1 && nu == 0.0) {
    throw DomainError("construction with x1 = 0 needs nu > 0: D^p f_p is undefined at the origin");
  }

  const double C = lower_bound_C(p, nu);
  TensorSampleResult result;
  result.report = VerifyReport("tensor_" + std::string(sample_mode_name(mode)), kRatioTolerance, seed);
  result.bound = mode == SampleMode::general ? constant_A_tilde(p, nu) : C;
  result.max_ratio = -std::numeric_limits<double>::infinity();
  result.opposite_max_ratio = std::numeric_limits<double>::quiet_NaN();
  const double bound_scale = result.bound;
  const double attain_scale = C * kAttainTolerance / kRatioTolerance;

  for (int i = 0; i < n_samples; ++i) {
    std::mt19937_64 rng(derive_seed(seed, static_cast<std::uint64_t>(i)));
    Vector x1;
    Vector x2;
    bool opposite = false;
    switch (mode) {
      case SampleMode::general:
        x1 = log_uniform_radius(rng) * unit_direction(metric, rng);
        x2 = log_uniform_radius(rng) * unit_direction(metric, rng);
        break;
      case SampleMode::collinear: {
        const Vector d = unit_direction(metric, rng);
        const double s1 = random_sign(rng) * log_uniform_radius(rng);
        opposite = i % 4 == 3;
        const double s2 = opposite ? -s1 : random_sign(rng) * log_uniform_radius(rng);
        x1 = s1 * d;
        x2 = s2 * d;
        break;
      }
      case SampleMode::construction: {
        x2 = log_uniform_radius(rng) * unit_direction(metric, rng);
        x1 = origin_x1 ? Vector(Vector::Zero(metric.dim())) : Vector(-x2);
        break;
      }
    }

    const double dist = metric.norm(x2 - x1);
    if (!(dist > 0.0)) continue;
    const double lb = tensor_diff_norm_lb(metric, p, nu, x1, x2, search).value;
    const double ratio = lb / std::pow(dist, nu);

    if (ratio > result.max_ratio) {
      result.max_ratio = ratio;
      result.witness_x1 = x1;
      result.witness_x2 = x2;
    }
    if (opposite && !(ratio <= result.opposite_max_ratio)) result.opposite_max_ratio = ratio;

    const std::vector<std::pair<std::string, double>> params = {
        {"p", p}, {"nu", nu}, {"sample", i}, {"dist", dist}};
    result.report.check_le("ratio_bounded", params, ratio, result.bound, bound_scale);
    if (mode == SampleMode::construction) {
      result.report.check_le("construction_attains_bound", params, C, ratio, attain_scale);
    }
  }

  if (mode == SampleMode::collinear && p % 2 == 1 && !std::isnan(result.opposite_max_ratio)) {
    result.report.check_le("opposite_pairs_attain_bound", {{"p", p}, {"nu", nu}}, C,
                           result.opposite_max_ratio, attain_scale);
  }
  return result;
}

}  // namespace normpow
