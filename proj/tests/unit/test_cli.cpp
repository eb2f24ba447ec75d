#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "config.hpp"
#include "table.hpp"

using namespace qbertrand::cli;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::string cell;
    bool quoted = false;
    for (char ch : line) {
      if (ch == '"') quoted = !quoted;
      else if (ch == ',' && !quoted) {
        cells.push_back(cell);
        cell.clear();
      } else cell += ch;
    }
    cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

}  // namespace

TEST_CASE("config parsing") {
  KeyValues kv;
  kv.set_entry("alpha=2.5");
  kv.set_entry("grid=[0.1, 5, 50]");
  CHECK(kv.number("alpha", 0.0) == 2.5);
  CHECK(kv.grid("grid", {0, 0, 0})[2] == 50.0);
  kv.set_entry("alpha=abc");
  CHECK_THROWS_AS(kv.number("alpha", 0.0), ConfigError);
  CHECK_FALSE(parse_number("1e400"));
  CHECK_FALSE(parse_number("nan"));
  CHECK_THROWS_AS(kv.require_known({"grid"}), ConfigError);
}

TEST_CASE("config file is overridden by arguments") {
  const std::string path = "qbertrand_cli_test.cfg";
  {
    std::ofstream f(path);
    f << "# comment\nfamily = first\nalpha = 2\ngrid = [1, 2, 2]\n";
  }
  const auto r = invoke({"potential", "--config", path, "grid=[1,1.5,2]"});
  std::remove(path.c_str());
  REQUIRE(r.code == 0);
  const auto rows = parse_csv(r.out);
  REQUIRE(rows.size() == 3);
  CHECK(rows[2][0] == "1.5");
}

TEST_CASE("potential: oscillator table") {
  const auto r = invoke({"potential", "family=first", "alpha=2", "grid=[0.1,5,50]"});
  REQUIRE(r.code == 0);
  const auto rows = parse_csv(r.out);
  REQUIRE(rows.size() == 51);
  CHECK(rows[0] == std::vector<std::string>{"r", "V"});
  CHECK(std::stod(rows[10][0]) == doctest::Approx(1.0));
  CHECK(std::stod(rows[10][1]) == doctest::Approx(0.5).epsilon(1e-14));
  // Round trip at 17 significant digits.
  for (std::size_t i = 1; i < rows.size(); ++i) CHECK(format_double(std::stod(rows[i][1])) == rows[i][1]);
}

TEST_CASE("potential: Morse form and JSON") {
  const auto r = invoke({"potential", "family=pct", "alpha=-1", "grid=[0.5,3,6]", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  REQUIRE(doc.size() == 6);
  for (const auto& row : doc) {
    const double rho = row["rho"];
    CHECK(row["V"].get<double>() == doctest::Approx(std::exp(-2 * rho)).epsilon(1e-13));
  }
}

TEST_CASE("config errors exit 2 and name the key") {
  auto r = invoke({"potential", "alpha=abc"});
  CHECK(r.code == 2);
  CHECK(r.err.find("alpha") != std::string::npos);
  r = invoke({"potential", "bogus=1"});
  CHECK(r.code == 2);
  CHECK(r.err.find("bogus") != std::string::npos);
  CHECK(invoke({"potential", "--format", "xml"}).code == 2);
  CHECK(invoke({}).code == 2);
}

TEST_CASE("spectrum") {
  auto r = invoke({"spectrum", "case=coulomb", "n_max=2", "l_max=1"});
  REQUIRE(r.code == 0);
  auto rows = parse_csv(r.out);
  CHECK(rows[0] == std::vector<std::string>{"n", "l", "E_analytic", "E_numeric", "abs_diff"});
  CHECK(rows[1][0] == "0");
  CHECK(rows[1][1] == "0");
  CHECK(std::stod(rows[1][2]) == -0.5);
  CHECK(rows[1][3].empty());

  r = invoke({"spectrum", "case=oscillator", "omega=1", "n_max=1", "l_max=1", "verify=true"});
  REQUIRE(r.code == 0);
  rows = parse_csv(r.out);
  CHECK(std::stod(rows[1][2]) == 1.5);
  for (std::size_t i = 1; i < rows.size(); ++i) CHECK(std::stod(rows[i][4]) < 1e-4);

  CHECK(invoke({"spectrum", "case=coulomb", "verify=true", "grid=[1e-3,60,40]"}).code == 3);
}

TEST_CASE("verify --only and exit code") {
  const auto r = invoke({"verify", "--only=bertrand", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["all_passed"] == true);
  CHECK(doc["seed"] == 42);
  for (const auto& [name, _] : doc["checks"].items()) CHECK(name.rfind("bertrand/", 0) == 0);
  CHECK(invoke({"verify", "--only", "nosuchgroup"}).code == 2);
}

TEST_CASE("classify, pct and second-class commands") {
  auto r = invoke({"classify", "alpha=[0.5,1,2]"});
  REQUIRE(r.code == 0);
  auto rows = parse_csv(r.out);
  CHECK(rows[2][1] == "Coulomb");
  CHECK(rows[3][1] == "Oscillator");

  r = invoke({"pct", "grid=[0.1,5,5]", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["rows"].size() == 5);
  CHECK(doc["form"] == "canonical");

  r = invoke({"second-class", "what=coefficients"});
  REQUIRE(r.code == 0);
  rows = parse_csv(r.out);
  CHECK(rows[1] == std::vector<std::string>{"A1", "1"});

  r = invoke({"second-class", "what=table", "a=-1", "b=0.5", "grid=[0.5,2,20]"});
  REQUIRE(r.code == 0);
  rows = parse_csv(r.out);
  CHECK(rows[1][4].empty());

  CHECK(invoke({"second-class", "what=coefficients", "b=0"}).code == 2);
}

TEST_CASE("--out writes the file") {
  const std::string path = "qbertrand_cli_out.csv";
  const auto r = invoke({"classify", "alpha=1", "--out", path});
  REQUIRE(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  CHECK(ss.str() == "alpha,class\n1,Coulomb\n");
  std::remove(path.c_str());
}
