#include "normpow/cli.hpp"
#include "normpow/polyfamily.hpp"

#include <doctest.h>
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace normpow;
using namespace normpow::cli;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "normpow");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream is(text);
  for (std::string l; std::getline(is, l);) out.push_back(l);
  return out;
}

std::vector<std::string> split(const std::string& row) {
  std::vector<std::string> out;
  std::stringstream ss(row);
  for (std::string c; std::getline(ss, c, ',');) out.push_back(c);
  if (!row.empty() && row.back() == ',') out.emplace_back();
  return out;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("poly --pmax 0 prints the constant polynomial") {
  const Result r = invoke({"poly", "--pmax", "0"});
  CHECK(r.code == 0);
  CHECK(r.out == "g_{0,q}(tau) = (1)\n");
  const Result j = invoke({"poly", "--pmax", "0", "--format", "json"});
  CHECK(j.out == "[{\"p\":0,\"tau_coeffs\":[[\"1\"]]}]\n");
}

TEST_CASE("poly JSON round trip is byte-identical") {
  const Result r = invoke({"poly", "--pmax", "12", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto parsed = nlohmann::ordered_json::parse(r.out);
  auto again = nlohmann::ordered_json::array();
  for (const auto& item : parsed) again.push_back(to_json(gpoly_from_json(item)));
  CHECK(again.dump() + "\n" == r.out);
}

TEST_CASE("poly csv lists nonzero coefficients") {
  const Result r = invoke({"poly", "--pmax", "2", "--format", "csv"});
  CHECK(r.out == "p,tau_power,q_power,coefficient\n0,0,0,1\n1,1,1,1\n2,0,1,1\n2,2,1,-2\n2,2,2,1\n");
}

TEST_CASE("constants --p 2 --nu 1") {
  const Result r = invoke({"constants", "--p", "2", "--nu", "1"});
  REQUIRE(r.code == 0);
  const auto rows = lines(r.out);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0] == "p,nu,C,H_bound,H_est,H_sym,A,A_tilde,lipschitz");
  const auto cells = split(rows[1]);
  REQUIRE(cells.size() == 9);
  CHECK(cells[2] == "6");
  CHECK(cells[8] == "6");
}

TEST_CASE("constants table") {
  const std::string csv = emit_constants_table(3, 0.5, Format::csv);
  const auto rows = lines(csv);
  REQUIRE(rows.size() == 13);
  bool seen_p3 = false;
  bool seen_p2 = false;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto c = split(rows[i]);
    REQUIRE(c.size() == 9);
    if (c[0] == "3" && c[1] == "1") {
      seen_p3 = true;
      CHECK(c[2] == "24");
      CHECK(c[7] == "24");
      CHECK(c[8] == "24");
    }
    if (c[0] == "2" && c[1] == "0") {
      seen_p2 = true;
      CHECK(c[4] == "0");
      CHECK(c[8].empty());
    }
  }
  CHECK(seen_p3);
  CHECK(seen_p2);
  CHECK(emit_constants_table(3, 0.5, Format::csv) == csv);

  const auto j = nlohmann::json::parse(emit_constants_table(1, 1.0, Format::json));
  REQUIRE(j.size() == 4);
  CHECK(j[1]["lipschitz"] == 1);
  CHECK(j[0]["lipschitz"].is_null());

  CHECK_THROWS_AS(emit_constants_table(3, 0.0, Format::csv), UsageError);
  CHECK(invoke({"constants", "--table", "--pmax", "2", "--nu-grid", "0.25"}).code == 0);
}

TEST_CASE("format_double uses 17 significant digits") {
  CHECK(format_double(0.1) == "0.10000000000000001");
  CHECK(format_double(6.0) == "6");
}

TEST_CASE("eval") {
  const Result r = invoke({"eval", "--p", "1", "--q", "2", "--x", "[3,4]", "--h", "1,0", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["value"].get<double>() == doctest::Approx(6.0));
  CHECK(j["tau"].get<double>() == doctest::Approx(0.6));

  const Result fd = invoke({"eval", "--p", "3", "--q", "3.5", "--x", "[0.3,0.4,0.5]", "--h", "[1,0.2,0]", "--fd-check"});
  CHECK(fd.code == 0);
  CHECK(fd.out.find("ok") != std::string::npos);

  CHECK(invoke({"eval", "--p", "3", "--q", "3", "--x", "[0,0]", "--h", "[1,0]"}).code == 2);
  CHECK(invoke({"eval", "--p", "1", "--q", "2", "--x", "[3,4]", "--h", "[1,0,0]"}).code == 2);
  CHECK(invoke({"eval", "--p", "1", "--q", "2", "--x", "[3,a]", "--h", "[1,0]"}).code == 2);
}

TEST_CASE("eval with a metric file") {
  const auto path = std::filesystem::temp_directory_path() / "normpow_test_metric.json";
  {
    std::ofstream f(path);
    f << R"({"dim": 2, "b": [[4, 0], [0, 1]]})";
  }
  const Result r = invoke({"eval", "--p", "1", "--q", "2", "--x", "[1,0]", "--h", "[0.5,0]",
                           "--metric", path.string(), "--format", "json"});
  REQUIRE(r.code == 0);
  // grad of <Bx,x> is 2Bx; 2 * 4 * 0.5 = 4
  CHECK(nlohmann::json::parse(r.out)["value"].get<double>() == doctest::Approx(4.0));

  {
    std::ofstream f(path);
    f << R"({"dim": 2, "b": [[1, 2], [2, 1]]})";
  }
  const Result bad = invoke({"eval", "--p", "1", "--q", "2", "--x", "[1,0]", "--h", "[1,0]",
                             "--metric", path.string()});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("positive definite") != std::string::npos);
  std::filesystem::remove(path);

  CHECK_THROWS_AS(load_metric("/nonexistent/metric.json"), UsageError);
}

TEST_CASE("verify exit codes") {
  CHECK(invoke({"verify", "--suite", "identities", "--pmax", "12"}).code == 0);
  const Result j = invoke({"verify", "--suite", "inequalities", "--pmax", "4", "--format", "json"});
  CHECK(j.code == 0);
  CHECK(nlohmann::json::parse(j.out)["passed"] == true);

  const Result neg = invoke({"verify", "--suite", "inequalities", "--pmax", "4", "--negative-controls", "--format", "json"});
  CHECK(neg.code == 1);
  const auto nj = nlohmann::json::parse(neg.out);
  bool any = false;
  for (const auto& r : nj["reports"]) any = any || !r["violations"].empty();
  CHECK(any);

  const Result tensor = invoke({"verify", "--suite", "tensor", "--pmax", "2", "--samples", "40"});
  CHECK(tensor.code == 0);
  CHECK(invoke({"verify", "--suite", "tensor", "--pmax", "3", "--samples", "10", "--negative-controls"}).code == 1);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(invoke({}).code == 2);
  CHECK(invoke({"frobnicate"}).code == 2);
  CHECK(invoke({"poly", "--pmax", "x"}).code == 2);
  CHECK(invoke({"verify", "--suite", "nope"}).code == 2);
  CHECK(invoke({"constants", "--nu", "2"}).code == 2);
  CHECK(invoke({"poly", "--format", "xml"}).code == 2);
  CHECK(invoke({"holder", "--mode", "diagonal"}).code == 2);
  CHECK(invoke({"poly", "--help"}).code == 0);
}

TEST_CASE("holder subcommand") {
  const Result r = invoke({"holder", "--p", "3", "--nu", "0.5", "--mode", "construction",
                           "--samples", "20", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["sampling"]["max_ratio"].get<double>() == doctest::Approx(18.561553006146873).epsilon(1e-6));
  CHECK(j["H_est"]["value"].get<double>() == doctest::Approx(13.125).epsilon(1e-9));

  const Result h2 = invoke({"holder", "--p", "2", "--nu", "0.5", "--samples", "30"});
  CHECK(h2.code == 0);
  CHECK(h2.out.find("closed form H_2") != std::string::npos);
}

TEST_CASE("environment variables provide defaults") {
  ::setenv("NORMPOW_PMAX", "1", 1);
  const Result r = invoke({"poly"});
  ::unsetenv("NORMPOW_PMAX");
  CHECK(lines(r.out).size() == 2);
  CHECK(lines(invoke({"poly"}).out).size() == 21);
}

TEST_CASE("parse_vector") {
  CHECK(parse_vector("[1, 2.5]") == std::vector<double>{1.0, 2.5});
  CHECK(parse_vector("1,2.5,-3") == std::vector<double>{1.0, 2.5, -3.0});
  CHECK_THROWS_AS(parse_vector(""), UsageError);
  CHECK_THROWS_AS(parse_vector("[1,"), UsageError);
  CHECK_THROWS_AS(parse_vector("1;2"), UsageError);
}

TEST_CASE("run accepts a hand-built config") {
  RunConfig c;
  c.subcommand = Subcommand::constants;
  c.p = 3;
  c.nu = 1.0;
  c.format = Format::json;
  std::ostringstream out, err;
  CHECK(run(c, out, err) == 0);
  CHECK(nlohmann::json::parse(out.str())[0]["lipschitz"] == 24);
}

}  // TEST_SUITE
