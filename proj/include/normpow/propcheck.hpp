#pragma once

#include "normpow/normcalc.hpp"
#include "normpow/report.hpp"

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace normpow {

/// n uniform points on [0, 1] plus 10^-k and 1 - 10^-k for k = 2..8, sorted.
std::vector<double> refined_unit_grid(int n);

/// 0.1, 0.2, ..., 1.0
std::vector<double> default_nu_grid();

/// g_{p,q} >= 0 on [0, 1] for q in [p - 1, p + 2]. The negative control
/// extends q down to p - 3.
VerifyReport check_nonnegativity(int p_max, int grid, bool negative_control = false);

/// g'_{p,q} >= 0 on [0, 1] for q in [p, p + 2]. Negative control: q from p - 2.
VerifyReport check_monotonicity(int p_max, int grid, bool negative_control = false);

/// max_{[-1,1]} |g_{p,q}| = prod_{i<p} (q - i), attained at tau = +-1, for
/// q in [p, p + 2]. Negative control: q from p - 2.
VerifyReport check_max_abs(int p_max, int grid, bool negative_control = false);

/// For G = g_{p,p+nu}: tau_2 -> (G(tau_2) - G(tau_1)) / (tau_2 - tau_1)^nu is
/// non-decreasing on ]tau_1, 1], and tau -> G(tau) / (1 - (1 - tau)^nu) is
/// non-increasing on ]0, 1]. Negative control: nu in {1.5, 2}.
VerifyReport check_fraction_monotone(int p_max, std::span<const double> nu_grid, int tau_grid,
                                     bool negative_control = false);

/// With G = g_{p,p+nu} and S = g_{p,p-2+nu}:
///   (i)   tau G'(tau) <= G(tau)
///   (ii)  (p + nu) S(tau_2) <= nu (G(tau_1) - tau_1 G'(tau_1)) for tau_1 <= tau_2
///   (iii) tau_1 -> (nu G(tau_1) - (p + nu) S(tau_2)) / tau_1 non-increasing on ]0, tau_2]
///   (iv)  -(1 - (1 - tau)^{1-nu}) G'(tau) <= (p + nu) S(tau)
/// Negative control: tau in [0, 2] for (i), and tau_1 > tau_2 allowed in (ii), (iii).
VerifyReport check_inequality_lemmas(int p_max, std::span<const double> nu_grid, int tau_grid,
                                     bool negative_control = false);

enum class SampleMode { general, collinear, construction };

std::string_view sample_mode_name(SampleMode mode);
/// Throws std::invalid_argument for unknown names.
SampleMode parse_sample_mode(std::string_view name);

/// Norm search used per sample: fewer random starts than the standalone
/// default, since the structured starts already cover the known maximizers.
NormSearchOptions sampling_search_options();

struct TensorSampleResult {
  VerifyReport report;
  /// A_tilde (general) or C (collinear, construction).
  double bound = 0.0;
  double max_ratio = 0.0;
  Vector witness_x1;
  Vector witness_x2;
  /// Collinear mode: max ratio over exactly opposite pairs; NaN otherwise.
  double opposite_max_ratio = 0.0;
};

/// Samples pairs (x1, x2) and the ratio
/// tensor_diff_norm_lb(x1, x2) / ||x2 - x1||^nu.
///   general:      B-isotropic directions, radii log-uniform in [1e-2, 1e2];
///                 ratio <= A_tilde (1 + 1e-9).
///   collinear:    x_i = s_i d with signed s_i, every fourth pair opposite;
///                 ratio <= C (1 + 1e-9); for odd p the opposite pairs reach C
///                 within 1e-6.
///   construction: x2 = h, x1 = 0 (even p) or -h (odd p); ratio = C within 1e-6.
/// Throws DomainError for construction with even p and nu = 0 (x1 = 0 is
/// outside the domain of D^p f_p).
///
/// Negative control (construction mode only): x1 is chosen by the wrong
/// parity rule, so the ratio falls short of C whenever nu < 1 or p is even.
TensorSampleResult sample_tensor_holder(const Metric& metric, int p, double nu, SampleMode mode,
                                        int n_samples, std::uint64_t seed,
                                        const NormSearchOptions& search = sampling_search_options(),
                                        bool negative_control = false);

}  // namespace normpow
