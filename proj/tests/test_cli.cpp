#include "doctest.h"

#include "verlinde/cli_app.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "verlinde/trig_sum.hpp"

using namespace verlinde;

namespace {

struct CliRun {
  int code = -1;
  std::string out;
  std::string err;
};

CliRun run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream ss(text);
  std::string line;
  while (std::getline(ss, line)) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("ver single weight with both routes") {
  auto res = run({"ver", "--r", "2", "--g", "2", "--k", "1", "--lambda", "0,0",
                  "--routes", "sum,residue"});
  REQUIRE(res.code == 0);
  auto ls = lines(res.out);
  REQUIRE(ls.size() == 1);
  auto rec = nlohmann::json::parse(ls[0]);
  CHECK(rec["r"] == 2);
  CHECK(rec["g"] == 2);
  CHECK(rec["k"] == 1);
  CHECK(rec["lambda"] == nlohmann::json::array({0, 0}));
  CHECK(rec["match"] == true);

  IntegralWeight lam;
  lam.v = {0, 0};
  SumResult direct = ver_sum({2, 2, 1, lam});
  CHECK(rec["sum"].get<std::string>() == direct.value.get_str());
  CHECK(rec["residue"].get<std::string>() == direct.value.get_str());
}

TEST_CASE("ver rejects weights outside the admissible box") {
  auto res = run({"ver", "--r", "2", "--g", "1", "--k", "2", "--lambda", "1,0"});
  CHECK(res.code == 2);
  CHECK(!res.err.empty());
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(run({"ver", "--bogus"}).code == 2);
  CHECK(run({"ver", "--r", "2", "--k", "1"}).code == 2);  // no weight source
  CHECK(run({"ver", "--r", "2", "--k", "1", "--grid", "--lambda", "0,0"}).code ==
        2);
  CHECK(run({"ver", "--r", "2", "--k", "1", "--lambda", "0,0", "--routes",
             "sum", "--both-sides"})
            .code == 2);
  CHECK(run({"nonsense"}).code == 2);
}

TEST_CASE("help exits cleanly") {
  auto res = run({"--help"});
  CHECK(res.code == 0);
  CHECK(res.out.find("ver") != std::string::npos);
  CHECK(res.out.find("crosscheck") != std::string::npos);
  CHECK(res.out.find("bases") != std::string::npos);
}

TEST_CASE("grid over admissible weights in csv form") {
  auto res = run({"ver", "--r", "2", "--g", "1", "--k", "2", "--grid",
                  "--routes", "sum", "--format", "csv"});
  REQUIRE(res.code == 0);
  auto ls = lines(res.out);
  REQUIRE(ls.size() == 3);
  CHECK(ls[0] == "r,g,k,lambda,sum,match");
  for (size_t i = 1; i < ls.size(); ++i)
    CHECK(ls[i].substr(ls[i].size() - 5) == ",true");
}

TEST_CASE("both routes agree over a grid") {
  auto res = run({"ver", "--r", "2", "--g", "1", "--k", "1..3", "--grid",
                  "--routes", "sum,residue"});
  REQUIRE(res.code == 0);
  for (const auto& line : lines(res.out)) {
    auto rec = nlohmann::json::parse(line);
    CHECK(rec["match"] == true);
    CHECK(rec["residue"] == rec["sum"]);
  }
}

TEST_CASE("config file supplies defaults, flags still win") {
  const char* path = "cli_test_config.json";
  {
    std::ofstream f(path);
    f << R"({"g": 2, "routes": "sum,residue", "k": "1"})";
  }
  auto from_config = run(
      {"ver", "--r", "2", "--lambda", "0,0", "--config", path});
  REQUIRE(from_config.code == 0);
  auto rec = nlohmann::json::parse(lines(from_config.out)[0]);
  CHECK(rec["g"] == 2);
  CHECK(rec.contains("sum"));
  CHECK(rec.contains("residue"));

  auto overridden = run({"ver", "--r", "2", "--g", "1", "--lambda", "0,0",
                         "--config", path});
  REQUIRE(overridden.code == 0);
  auto rec2 = nlohmann::json::parse(lines(overridden.out)[0]);
  CHECK(rec2["g"] == 1);
  std::remove(path);

  CHECK(run({"ver", "--r", "2", "--lambda", "0,0", "--config",
             "no_such_config.json"})
            .code == 2);
}

TEST_CASE("output is deterministic and independent of the job count") {
  std::vector<std::string> base{"ver",     "--r",      "3",     "--g", "1",
                                "--k",     "2",        "--grid", "--routes",
                                "residue", "--basis",  "all"};
  auto first = run(base);
  auto second = run(base);
  REQUIRE(first.code == 0);
  CHECK(first.out == second.out);

  auto parallel = base;
  parallel.push_back("--jobs");
  parallel.push_back("3");
  auto third = run(parallel);
  REQUIRE(third.code == 0);
  CHECK(third.out == first.out);
}

TEST_CASE("crosscheck suites pass") {
  for (const std::string suite :
       {"basis-independence", "chamber-independence", "wall-crossing",
        "weyl-antisymmetry", "two-point"}) {
    auto res = run({"crosscheck", "--suite", suite});
    CHECK(res.code == 0);
    CHECK(res.out.find(": PASS") != std::string::npos);
  }
  CHECK(run({"crosscheck", "--suite", "no-such-suite"}).code == 2);
  CHECK(run({"crosscheck"}).code == 2);  // --suite is required
}

TEST_CASE("injected sign flip is caught by the basis independence suite") {
  auto res =
      run({"crosscheck", "--suite", "basis-independence", "--inject-sign-flip"});
  CHECK(res.code == 1);
  CHECK(res.out.find("FAIL") != std::string::npos);
}

TEST_CASE("bases listing and verification") {
  auto ham = run({"bases", "--r", "4", "--kind", "hamiltonian", "--m", "1",
                  "--verify"});
  CHECK(ham.code == 0);
  CHECK(ham.out.find("count=6") != std::string::npos);
  CHECK(ham.out.find("diagonal=true") != std::string::npos);

  auto nbc = run({"bases", "--r", "4", "--kind", "nbc", "--order",
                  "13,14,23,24,12,34"});
  REQUIRE(nbc.code == 0);
  auto ls = lines(nbc.out);
  REQUIRE(ls.size() == 7);
  CHECK(ls[0] == "13 14 23");
  CHECK(ls[6] == "count=6");

  CHECK(run({"bases", "--r", "3", "--kind", "nbc", "--order", "12,13"}).code ==
        2);
  CHECK(run({"bases", "--r", "9"}).code == 2);
  CHECK(run({"bases", "--r", "3", "--kind", "mystery"}).code == 2);
}
