#include "normpow/cli.hpp"
#include "normpow/constants.hpp"
#include "normpow/error.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>

namespace normpow::cli {

namespace {

const char* const kColumns[] = {"p",   "nu", "C",       "H_bound",  "H_est",
                                "H_sym", "A", "A_tilde", "lipschitz"};

std::vector<double> nu_values(double step) {
  if (!(step > 0.0 && step <= 1.0)) throw UsageError("--nu-grid must lie in (0, 1]");
  std::vector<double> nus;
  for (int i = 0;; ++i) {
    double nu = i * step;
    if (nu > 1.0 + 1e-9) break;
    if (std::abs(nu - 1.0) <= 1e-9) nu = 1.0;
    nus.push_back(nu);
  }
  return nus;
}

std::string lipschitz_text(const HolderConstants& c) {
  return c.nu == 1.0 ? lipschitz_constant(c.p).str() : std::string();
}

std::vector<std::string> row_cells(const HolderConstants& c) {
  return {std::to_string(c.p), format_double(c.nu),      format_double(c.C),
          format_double(c.H_bound), format_double(c.H_est), format_double(c.H_sym),
          format_double(c.A),  format_double(c.A_tilde), lipschitz_text(c)};
}

nlohmann::ordered_json row_json(const HolderConstants& c) {
  nlohmann::ordered_json j;
  j["p"] = c.p;
  j["nu"] = c.nu;
  j["C"] = c.C;
  j["H_bound"] = c.H_bound;
  j["H_est"] = c.H_est;
  j["H_sym"] = c.H_sym;
  j["A"] = c.A;
  j["A_tilde"] = c.A_tilde;
  if (c.nu == 1.0) {
    const BigInt l = lipschitz_constant(c.p);
    if (l <= std::numeric_limits<std::uint64_t>::max()) {
      j["lipschitz"] = l.convert_to<std::uint64_t>();
    } else {
      j["lipschitz"] = l.str();
    }
  } else {
    j["lipschitz"] = nullptr;
  }
  return j;
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string format_constants(const std::vector<HolderConstants>& rows, Format format) {
  std::ostringstream os;
  switch (format) {
    case Format::json: {
      auto arr = nlohmann::ordered_json::array();
      for (const auto& c : rows) arr.push_back(row_json(c));
      os << arr.dump(2) << '\n';
      break;
    }
    case Format::csv: {
      for (std::size_t i = 0; i < std::size(kColumns); ++i) os << (i ? "," : "") << kColumns[i];
      os << '\n';
      for (const auto& c : rows) {
        const auto cells = row_cells(c);
        for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << cells[i];
        os << '\n';
      }
      break;
    }
    case Format::pretty: {
      for (const char* col : kColumns) os << std::setw(24) << col;
      os << '\n';
      for (const auto& c : rows) {
        for (const auto& cell : row_cells(c)) os << std::setw(24) << cell;
        os << '\n';
      }
      break;
    }
  }
  return os.str();
}

std::string emit_constants_table(int p_max, double nu_step, Format format) {
  if (p_max < 0) throw UsageError("--pmax must be non-negative");
  std::vector<HolderConstants> rows;
  const std::vector<double> nus = nu_values(nu_step);
  for (int p = 0; p <= p_max; ++p) {
    for (double nu : nus) rows.push_back(compute_constants(p, nu));
  }
  return format_constants(rows, format);
}

std::vector<double> parse_vector(const std::string& text) {
  std::vector<double> v;
  const auto first = text.find_first_not_of(" \t");
  if (first != std::string::npos && text[first] == '[') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
      v = j.get<std::vector<double>>();
    } catch (const nlohmann::json::exception& e) {
      throw UsageError("cannot parse vector '" + text + "': " + e.what());
    }
  } else {
    std::stringstream ss(text);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
      std::size_t used = 0;
      try {
        v.push_back(std::stod(cell, &used));
      } catch (const std::exception&) {
        throw UsageError("cannot parse vector entry '" + cell + "'");
      }
      if (cell.find_first_not_of(" \t", used) != std::string::npos) {
        throw UsageError("cannot parse vector entry '" + cell + "'");
      }
    }
  }
  if (v.empty()) throw UsageError("empty vector '" + text + "'");
  return v;
}

Metric load_metric(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open metric file " + path);
  nlohmann::json j;
  std::vector<std::vector<double>> rows;
  int dim = 0;
  try {
    j = nlohmann::json::parse(in);
    dim = j.at("dim").get<int>();
    rows = j.at("b").get<std::vector<std::vector<double>>>();
  } catch (const nlohmann::json::exception& e) {
    throw UsageError("bad metric file " + path + ": " + e.what());
  }
  if (dim < 1 || static_cast<int>(rows.size()) != dim) {
    throw DimensionMismatch("metric file " + path + ": \"dim\" does not match \"b\"");
  }
  return make_metric(rows);
}

}  // namespace normpow::cli
