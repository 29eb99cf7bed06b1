#include "normpow/cli.hpp"
#include "normpow/constants.hpp"
#include "normpow/error.hpp"
#include "normpow/polyfamily.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cmath>
#include <ostream>

namespace normpow::cli {

namespace {

using json = nlohmann::ordered_json;

Format parse_format(const std::string& text) {
  if (text == "pretty") return Format::pretty;
  if (text == "json") return Format::json;
  if (text == "csv") return Format::csv;
  throw UsageError("unknown format: " + text);
}

Vector to_vector(const std::vector<double>& v) {
  return Eigen::Map<const Vector>(v.data(), static_cast<Eigen::Index>(v.size()));
}

json vector_json(const Vector& v) {
  json arr = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(v(i));
  return arr;
}

json finite_or_null(double v) {
  if (std::isfinite(v)) return v;
  return nullptr;
}

Metric resolve_metric(const RunConfig& c, int dim) {
  if (c.metric_path) return load_metric(*c.metric_path);
  if (dim < 1) throw UsageError("dimension must be positive");
  return Metric::identity(dim);
}

int run_poly(const RunConfig& c, Format format, std::ostream& out) {
  if (c.p_max < 0) throw UsageError("--pmax must be non-negative");
  const std::vector<GPoly> family = generate_family(c.p_max);
  switch (format) {
    case Format::json: {
      json arr = json::array();
      for (const auto& g : family) arr.push_back(to_json(g));
      out << arr.dump() << '\n';
      break;
    }
    case Format::csv:
      out << "p,tau_power,q_power,coefficient\n";
      for (const auto& g : family) {
        const auto& rows = g.poly.tau_coeffs();
        for (std::size_t k = 0; k < rows.size(); ++k) {
          const auto& qc = rows[k].coeffs();
          for (std::size_t i = 0; i < qc.size(); ++i) {
            if (qc[i] != 0) out << g.p << ',' << k << ',' << i << ',' << qc[i].str() << '\n';
          }
        }
      }
      break;
    case Format::pretty:
      for (const auto& g : family) {
        out << "g_{" << g.p << ",q}(tau) = " << g.poly.to_string() << '\n';
      }
      break;
  }
  return 0;
}

int run_eval(const RunConfig& c, Format format, std::ostream& out) {
  if (c.x.empty() || c.h.empty()) throw UsageError("eval needs --x and --h");
  if (c.x.size() != c.h.size()) throw UsageError("--x and --h must have the same length");
  if (c.p < 0) throw UsageError("--p must be non-negative");
  const Metric metric = resolve_metric(c, static_cast<int>(c.x.size()));
  const Vector x = to_vector(c.x);
  const Vector h = to_vector(c.h);

  const double value = deriv_diag(metric, c.p, c.q, x, h);
  const double hn = metric.norm(h);
  const double t = hn > 0.0 ? tau(metric, x, h / hn) : 0.0;

  double fd = std::nan("");
  double rel = std::nan("");
  bool agree = true;
  if (c.fd_check) {
    if (!(hn > 0.0)) throw UsageError("--fd-check needs a nonzero direction");
    fd = fd_oracle(metric, c.p, c.q, x, h / hn) * std::pow(hn, c.p);
    rel = std::abs(value - fd) / (1.0 + std::abs(value));
    agree = rel <= (c.p <= 2 ? 1e-4 : 1e-3);
  }

  switch (format) {
    case Format::json: {
      json j;
      j["p"] = c.p;
      j["q"] = c.q;
      j["x"] = vector_json(x);
      j["h"] = vector_json(h);
      j["tau"] = t;
      j["value"] = value;
      if (c.fd_check) {
        j["fd"] = finite_or_null(fd);
        j["fd_relative_error"] = finite_or_null(rel);
        j["fd_agrees"] = agree;
      }
      out << j.dump(2) << '\n';
      break;
    }
    case Format::csv:
      out << "p,q,tau,value" << (c.fd_check ? ",fd,fd_relative_error" : "") << '\n';
      out << c.p << ',' << format_double(c.q) << ',' << format_double(t) << ','
          << format_double(value);
      if (c.fd_check) out << ',' << format_double(fd) << ',' << format_double(rel);
      out << '\n';
      break;
    case Format::pretty:
      out << "D^" << c.p << " f_" << format_double(c.q) << "(x)[h]^" << c.p << " = "
          << format_double(value) << '\n';
      out << "tau_h(x) = " << format_double(t) << '\n';
      if (c.fd_check) {
        out << "finite differences = " << format_double(fd) << " (relative error "
            << format_double(rel) << (agree ? ", ok" : ", MISMATCH") << ")\n";
      }
      break;
  }
  return agree ? 0 : 1;
}

int run_constants(const RunConfig& c, Format format, std::ostream& out) {
  if (c.table) {
    out << emit_constants_table(c.p_max, c.nu_step, format);
    return 0;
  }
  if (c.p < 0) throw UsageError("--p must be non-negative");
  if (!(c.nu >= 0.0 && c.nu <= 1.0)) throw UsageError("--nu must lie in [0, 1]");
  HolderEstimateOptions options;
  options.grid = c.grid;
  out << format_constants({compute_constants(c.p, c.nu, options)}, format);
  return 0;
}

void print_report_line(const VerifyReport& r, std::ostream& out) {
  out << (r.passed() ? "[PASS] " : "[FAIL] ") << r.suite_name() << "  cases=" << r.cases_run()
      << "  worst_margin=" << format_double(r.worst_margin())
      << "  violations=" << r.violations().size() << '\n';
  std::size_t shown = 0;
  for (const auto& v : r.violations()) {
    if (++shown > 5) {
      out << "    ...\n";
      break;
    }
    out << "    " << v.check;
    for (const auto& [k, val] : v.params) out << ' ' << k << '=' << format_double(val);
    out << "  lhs=" << format_double(v.lhs) << " rhs=" << format_double(v.rhs)
        << " gap=" << format_double(v.gap);
    if (!v.detail.empty()) out << "  (" << v.detail << ')';
    out << '\n';
  }
}

int run_holder(const RunConfig& c, Format format, std::ostream& out) {
  if (c.p < 0) throw UsageError("--p must be non-negative");
  if (!(c.nu >= 0.0 && c.nu <= 1.0)) throw UsageError("--nu must lie in [0, 1]");
  if (c.samples < 1) throw UsageError("--samples must be positive");
  HolderEstimateOptions options;
  options.grid = c.grid;
  const HolderEstimate est = estimate_H_poly(c.p, c.nu, options);
  const Metric metric = resolve_metric(c, c.dim);
  const TensorSampleResult s = sample_tensor_holder(metric, c.p, c.nu, c.mode, c.samples, c.seed);
  const double C = lower_bound_C(c.p, c.nu);
  const double A_tilde = constant_A_tilde(c.p, c.nu);

  if (format == Format::json) {
    json j;
    j["p"] = c.p;
    j["nu"] = c.nu;
    j["H_est"] = {{"value", est.value},
                  {"argmax", est.argmax},
                  {"line_value", est.line_value},
                  {"grid_value", finite_or_null(est.grid_value)}};
    j["H_bound"] = holder_bound_product(c.p, c.nu);
    if (c.p == 2) {
      const H2Optimum h2 = optimal_H2(c.nu);
      j["H2_closed_form"] = {{"value", h2.value}, {"tau_star", h2.tau_star}};
    }
    j["C"] = C;
    j["A_tilde"] = A_tilde;
    json sj;
    sj["mode"] = std::string(sample_mode_name(c.mode));
    sj["samples"] = c.samples;
    sj["seed"] = c.seed;
    sj["bound"] = s.bound;
    sj["max_ratio"] = finite_or_null(s.max_ratio);
    sj["opposite_max_ratio"] = finite_or_null(s.opposite_max_ratio);
    sj["witness_x1"] = vector_json(s.witness_x1);
    sj["witness_x2"] = vector_json(s.witness_x2);
    sj["report"] = s.report.to_json();
    j["sampling"] = std::move(sj);
    out << j.dump(2) << '\n';
  } else {
    out << "H_" << c.p << "," << format_double(c.nu) << " estimate = " << format_double(est.value)
        << " at tau_1 = " << format_double(est.argmax) << '\n';
    out << "product bound = " << format_double(holder_bound_product(c.p, c.nu)) << '\n';
    if (c.p == 2) out << "closed form H_2 = " << format_double(optimal_H2(c.nu).value) << '\n';
    out << "C = " << format_double(C) << ", A_tilde = " << format_double(A_tilde) << '\n';
    out << sample_mode_name(c.mode) << " sampling (" << c.samples << " pairs): max ratio "
        << format_double(s.max_ratio) << ", bound " << format_double(s.bound) << '\n';
    if (!std::isnan(s.opposite_max_ratio)) {
      out << "opposite pairs: max ratio " << format_double(s.opposite_max_ratio) << '\n';
    }
    print_report_line(s.report, out);
  }
  return s.report.passed() ? 0 : 1;
}

std::vector<VerifyReport> inequality_reports(int p_max, bool negative) {
  const std::vector<double> nus = default_nu_grid();
  return {check_nonnegativity(p_max, 501, negative), check_monotonicity(p_max, 501, negative),
          check_max_abs(p_max, 501, negative),
          check_fraction_monotone(p_max, nus, 101, negative),
          check_inequality_lemmas(p_max, nus, 101, negative)};
}

std::vector<VerifyReport> tensor_reports(const RunConfig& c, bool negative) {
  const Metric metric = resolve_metric(c, c.dim);
  const int p_hi = std::min(c.p_max, 4);
  std::vector<VerifyReport> reports;
  const std::vector<SampleMode> modes =
      negative ? std::vector<SampleMode>{SampleMode::construction}
               : std::vector<SampleMode>{SampleMode::general, SampleMode::collinear,
                                         SampleMode::construction};
  for (SampleMode mode : modes) {
    VerifyReport merged;
    bool first = true;
    for (int p = 1; p <= p_hi; ++p) {
      for (double nu : {0.25, 0.5, 0.75, 1.0}) {
        const std::uint64_t seed = derive_seed(c.seed, static_cast<std::uint64_t>(p * 100 + nu * 4));
        TensorSampleResult s = sample_tensor_holder(metric, p, nu, mode, c.samples, seed,
                                                    sampling_search_options(), negative);
        if (first) {
          merged = VerifyReport(s.report.suite_name(), s.report.tolerance(), c.seed);
          first = false;
        }
        merged.merge(s.report);
      }
    }
    if (!first) reports.push_back(std::move(merged));
  }
  return reports;
}

int run_verify(const RunConfig& c, Format format, std::ostream& out) {
  const std::string& suite = c.suite;
  if (suite != "all" && suite != "identities" && suite != "inequalities" && suite != "tensor") {
    throw UsageError("unknown suite: " + suite);
  }
  if (c.p_max < 1) throw UsageError("--pmax must be at least 1");
  if (c.samples < 1) throw UsageError("--samples must be positive");

  std::vector<VerifyReport> reports;
  if ((suite == "all" || suite == "identities") && !c.negative_controls) {
    reports.push_back(check_identity_suite(c.p_max));
  }
  if (suite == "all" || suite == "inequalities") {
    for (auto& r : inequality_reports(c.p_max, c.negative_controls)) reports.push_back(std::move(r));
  }
  if (suite == "all" || suite == "tensor") {
    for (auto& r : tensor_reports(c, c.negative_controls)) reports.push_back(std::move(r));
  }

  bool passed = true;
  for (const auto& r : reports) passed = passed && r.passed();

  if (format == Format::json) {
    json j;
    j["suite"] = suite;
    j["p_max"] = c.p_max;
    j["seed"] = c.seed;
    j["negative_controls"] = c.negative_controls;
    j["passed"] = passed;
    json arr = json::array();
    for (const auto& r : reports) arr.push_back(r.to_json());
    j["reports"] = std::move(arr);
    out << j.dump(2) << '\n';
  } else {
    for (const auto& r : reports) print_report_line(r, out);
    out << (passed ? "all suites passed" : "violations found") << '\n';
  }
  return passed ? 0 : 1;
}

}  // namespace

std::optional<RunConfig> parse_args(int argc, const char* const* argv, std::ostream& out,
                                    std::ostream& err, int& exit_code) {
  CLI::App app{"Derivatives of powers of the Euclidean norm: polynomials, constants, checks",
               "normpow"};
  app.require_subcommand(1, 1);

  RunConfig c;
  std::string format_text;
  std::string x_text;
  std::string h_text;
  std::string mode_text = "general";
  std::string metric_path;
  int poly_p_max = 20;

  auto add_format = [&](CLI::App* sub, std::vector<std::string> allowed) {
    sub->add_option("--format", format_text, "Output format")
        ->check(CLI::IsMember(allowed))
        ->envname("NORMPOW_FORMAT");
  };
  auto add_metric = [&](CLI::App* sub) {
    sub->add_option("--metric", metric_path, "JSON file {\"dim\": n, \"b\": [[...]]}")
        ->envname("NORMPOW_METRIC");
  };

  CLI::App* poly = app.add_subcommand("poly", "Generate g_{p,q} for p = 0..pmax");
  poly->add_option("--pmax", poly_p_max, "Largest p")->envname("NORMPOW_PMAX")->capture_default_str();
  add_format(poly, {"json", "pretty", "csv"});

  CLI::App* eval = app.add_subcommand("eval", "Evaluate D^p f_q(x)[h]^p");
  eval->set_help_flag("--help", "Print this help message and exit");
  eval->add_option("--p", c.p, "Derivative order")->required();
  eval->add_option("--q", c.q, "Power of the norm")->required();
  eval->add_option("--x", x_text, "Point, as a JSON array or CSV row")->required();
  eval->add_option("--h", h_text, "Direction, as a JSON array or CSV row")->required();
  add_metric(eval);
  eval->add_flag("--fd-check", c.fd_check, "Compare with nested central differences");
  add_format(eval, {"json", "pretty", "csv"});

  CLI::App* constants = app.add_subcommand("constants", "Hoelder and Lipschitz constants");
  constants->add_option("--p", c.p, "Derivative order")->envname("NORMPOW_P")->capture_default_str();
  constants->add_option("--nu", c.nu, "Hoelder exponent in [0, 1]")->envname("NORMPOW_NU")->capture_default_str();
  constants->add_flag("--table", c.table, "Tabulate p = 0..pmax over a nu grid");
  constants->add_option("--pmax", c.p_max, "Largest p of the table")->envname("NORMPOW_PMAX")->capture_default_str();
  constants->add_option("--nu-grid", c.nu_step, "Step of the nu grid")->envname("NORMPOW_NU_GRID")->capture_default_str();
  constants->add_option("--grid", c.grid, "Grid points for the H estimate")->envname("NORMPOW_GRID")->capture_default_str();
  add_format(constants, {"csv", "json", "pretty"});

  CLI::App* holder = app.add_subcommand("holder", "Estimate H and sample tensor Hoelder ratios");
  holder->add_option("--p", c.p, "Derivative order")->envname("NORMPOW_P")->capture_default_str();
  holder->add_option("--nu", c.nu, "Hoelder exponent in [0, 1]")->envname("NORMPOW_NU")->capture_default_str();
  holder->add_option("--mode", mode_text, "Sampling mode")
      ->check(CLI::IsMember({"general", "collinear", "construction"}))
      ->envname("NORMPOW_MODE")
      ->capture_default_str();
  holder->add_option("--samples", c.samples, "Sampled pairs")->envname("NORMPOW_SAMPLES")->capture_default_str();
  holder->add_option("--seed", c.seed, "Random seed")->envname("NORMPOW_SEED")->capture_default_str();
  holder->add_option("--dim", c.dim, "Dimension when no metric file is given")->envname("NORMPOW_DIM")->capture_default_str();
  holder->add_option("--grid", c.grid, "Grid points for the H estimate")->envname("NORMPOW_GRID")->capture_default_str();
  add_metric(holder);
  add_format(holder, {"json", "pretty"});

  CLI::App* verify = app.add_subcommand("verify", "Run the property suites");
  verify->add_option("--suite", c.suite, "Suite to run")
      ->check(CLI::IsMember({"all", "identities", "inequalities", "tensor"}))
      ->capture_default_str();
  verify->add_option("--pmax", c.p_max, "Largest p")->envname("NORMPOW_PMAX")->capture_default_str();
  verify->add_option("--seed", c.seed, "Random seed")->envname("NORMPOW_SEED")->capture_default_str();
  verify->add_option("--samples", c.samples, "Sampled pairs per (p, nu, mode)")->envname("NORMPOW_SAMPLES")->capture_default_str();
  verify->add_option("--dim", c.dim, "Dimension when no metric file is given")->envname("NORMPOW_DIM")->capture_default_str();
  add_metric(verify);
  verify->add_flag("--negative-controls", c.negative_controls,
                   "Run with hypotheses disabled; violations are expected");
  add_format(verify, {"json", "pretty"});

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    exit_code = code == 0 ? 0 : 2;
    return std::nullopt;
  }

  try {
    if (poly->parsed()) {
      c.subcommand = Subcommand::poly;
      c.p_max = poly_p_max;
    } else if (eval->parsed()) {
      c.subcommand = Subcommand::eval;
      c.x = parse_vector(x_text);
      c.h = parse_vector(h_text);
    } else if (constants->parsed()) {
      c.subcommand = Subcommand::constants;
    } else if (holder->parsed()) {
      c.subcommand = Subcommand::holder;
      c.mode = parse_sample_mode(mode_text);
    } else {
      c.subcommand = Subcommand::verify;
    }
    if (!format_text.empty()) c.format = parse_format(format_text);
    if (!metric_path.empty()) c.metric_path = metric_path;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    exit_code = 2;
    return std::nullopt;
  }
  exit_code = 0;
  return c;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    switch (config.subcommand) {
      case Subcommand::poly: return run_poly(config, config.format.value_or(Format::pretty), out);
      case Subcommand::eval: return run_eval(config, config.format.value_or(Format::pretty), out);
      case Subcommand::constants:
        return run_constants(config, config.format.value_or(Format::csv), out);
      case Subcommand::holder:
        return run_holder(config, config.format.value_or(Format::pretty), out);
      case Subcommand::verify:
        return run_verify(config, config.format.value_or(Format::pretty), out);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const MonotonicityViolation& e) {
    err << "check failed: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  int code = 0;
  const std::optional<RunConfig> config = parse_args(argc, argv, out, err, code);
  if (!config) return code;
  return run(*config, out, err);
}

}  // namespace normpow::cli
