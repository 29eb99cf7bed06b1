#pragma once

#include "normpow/constants.hpp"
#include "normpow/propcheck.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace normpow::cli {

enum class Subcommand { poly, eval, constants, holder, verify };
enum class Format { pretty, json, csv };

/// Fully resolved command line. Every field has a default, so a parsed config
/// is always complete. Unset format means the subcommand's natural default.
struct RunConfig {
  Subcommand subcommand = Subcommand::verify;
  int p = 2;
  int p_max = 8;
  double nu = 0.5;
  double q = 2.0;
  int grid = 2001;
  int samples = 10000;
  std::uint64_t seed = 42;
  std::optional<Format> format;
  std::optional<std::string> metric_path;

  // eval
  std::vector<double> x;
  std::vector<double> h;
  bool fd_check = false;

  // constants
  bool table = false;
  double nu_step = 0.05;

  // holder
  SampleMode mode = SampleMode::general;
  int dim = 3;

  // verify
  std::string suite = "all";
  bool negative_controls = false;
};

/// Raised for invalid flag values or combinations; maps to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses argv (flags, then NORMPOW_* environment variables, then defaults).
/// Returns nullopt after printing help or a parse error; exit_code is set.
std::optional<RunConfig> parse_args(int argc, const char* const* argv, std::ostream& out,
                                    std::ostream& err, int& exit_code);

/// Dispatches to the owning module. 0 = success, 1 = a check failed,
/// 2 = usage or input error (message on err).
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// parse_args + run.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// One row per (p, nu) for p = 0..p_max and nu = 0, nu_step, ..., 1.
std::string emit_constants_table(int p_max, double nu_step, Format format);

std::string format_constants(const std::vector<HolderConstants>& rows, Format format);

/// "%.17g"
std::string format_double(double v);

/// "[1, 2.5]" (JSON) or "1,2.5" (CSV).
std::vector<double> parse_vector(const std::string& text);

/// {"dim": n, "b": [[...], ...]}
Metric load_metric(const std::string& path);

}  // namespace normpow::cli
