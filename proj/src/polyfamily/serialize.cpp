#include "normpow/error.hpp"
#include "normpow/polyfamily.hpp"

namespace normpow {

// {"p": int, "tau_coeffs": [[ "c0", "c1", ... ], ...]}, big integers as decimal strings.
nlohmann::ordered_json to_json(const GPoly& g) {
  nlohmann::ordered_json j;
  j["p"] = g.p;
  auto& rows = j["tau_coeffs"] = nlohmann::ordered_json::array();
  for (const auto& c : g.poly.tau_coeffs()) {
    auto row = nlohmann::ordered_json::array();
    for (const auto& v : c.coeffs()) row.push_back(v.str());
    rows.push_back(std::move(row));
  }
  return j;
}

GPoly gpoly_from_json(const nlohmann::ordered_json& j) {
  if (!j.is_object() || !j.contains("p") || !j.contains("tau_coeffs")) {
    throw DomainError("GPoly JSON needs fields \"p\" and \"tau_coeffs\"");
  }
  GPoly g;
  g.p = j.at("p").get<int>();
  std::vector<QPoly> coeffs;
  for (const auto& row : j.at("tau_coeffs")) {
    std::vector<BigInt> qc;
    for (const auto& v : row) {
      if (!v.is_string()) throw DomainError("GPoly coefficients must be decimal strings");
      try {
        qc.emplace_back(v.get<std::string>());
      } catch (const std::runtime_error&) {
        throw DomainError("not a decimal integer: " + v.get<std::string>());
      }
    }
    coeffs.emplace_back(std::move(qc));
  }
  g.poly = BiPoly(std::move(coeffs));
  return g;
}

}  // namespace normpow
