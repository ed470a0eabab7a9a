#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"

using strata::cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("mv text and json") {
  auto r = call({"mv", "1,0,-2,0,1"});
  CHECK(r.code == strata::cli::kExitOk);
  CHECK(r.out == "[2,2] l=4 q=2 surplus=2 codim=2 pairs=0\n");
  auto j = nlohmann::json::parse(call({"--format", "json", "mv", "1,-3,3,-1"}).out);
  CHECK(j["mv"] == std::vector<int>{3});
  CHECK(j["codim"] == 2);
}

TEST_CASE("bad input exits with the usage code") {
  auto r = call({"mv", "2,1"});
  CHECK(r.code == strata::cli::kExitUsage);
  CHECK(r.err.find("leading coefficient") != std::string::npos);
  CHECK(call({}).code == strata::cli::kExitUsage);
  CHECK(call({"sample", "1,2", "-n", "4"}).code == strata::cli::kExitUsage);
  CHECK(call({"poset", "99"}).code == strata::cli::kExitUsage);
  CHECK(call({"tangent", "{not json"}).code == strata::cli::kExitUsage);
}

TEST_CASE("poset json and dot") {
  auto j = nlohmann::json::parse(call({"poset", "4"}).out);
  CHECK(j["nodes"].size() == 11);
  auto dot = call({"--format", "dot", "poset", "4"}).out;
  CHECK(dot.rfind("digraph", 0) == 0);
}

TEST_CASE("sample is seeded and round-trips into tangent") {
  auto a = call({"--seed", "3", "sample", "2,1", "-n", "3", "--count", "2"});
  auto b = call({"--seed", "3", "sample", "2,1", "-n", "3", "--count", "2"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  std::istringstream lines(a.out);
  std::string first;
  std::getline(lines, first);
  auto t = call({"tangent", first});
  REQUIRE(t.code == 0);
  auto j = nlohmann::json::parse(t.out);
  CHECK(j["basis"].size() == 2);
  CHECK(j["margin"].get<double>() > 1e-8);
}

TEST_CASE("verify reports a summary line and passes") {
  auto r = call({"verify", "-n", "4", "--seeds", "2", "--samples", "3"});
  CHECK(r.code == strata::cli::kExitOk);
  CHECK(r.out.find("summary:") != std::string::npos);
  CHECK(r.out.find("0 failed: PASS") != std::string::npos);
  CHECK(r.out.find("FAIL ") == std::string::npos);
  auto inc = call({"verify", "-n", "4", "--which", "leftright", "--seeds", "1", "--root-order", "increasing"});
  CHECK(inc.code == strata::cli::kExitFail);
}

TEST_CASE("swallowtail csv to a file") {
  const std::string path = "cli_swallowtail_test.csv";
  auto r = call({"--format", "csv", "--out", path, "swallowtail", "--resolution", "3"});
  CHECK(r.code == 0);
  std::ifstream in(path);
  std::string header;
  std::getline(in, header);
  CHECK(header == "region,branch,t,s,a2,a3,a4,mv,expected_mv,res_zero");
  std::remove(path.c_str());
}
