#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include <json.hpp>

#include "spinext/cli.hpp"

using Json = nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = spinext::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

Json result_of(std::vector<std::string> args) {
  args.push_back("--format");
  args.push_back("json");
  const auto r = run(args);
  REQUIRE_MESSAGE(r.code == 0, r.err);
  return Json::parse(r.out).at("result");
}

struct EnvGuard {
  explicit EnvGuard(const char* value) { ::setenv("SPINEXT_BUDGET", value, 1); }
  ~EnvGuard() { ::unsetenv("SPINEXT_BUDGET"); }
};

}  // namespace

TEST_CASE("cli examples") {
  const auto count = result_of({"surface", "count", "--genus", "3", "--brute-force"});
  CHECK(count.at("b") == 36);
  CHECK(count.at("u") == 28);
  CHECK(count.at("match") == true);

  CHECK(result_of({"torus", "orbit", "--dim", "3", "--spin", "100"}).at("size") == 7);
  CHECK(result_of({"torus", "t3-gate", "--signature", "8"}).at("tag") == "Indeterminate");
  CHECK(result_of({"torus", "t3-gate", "--signature", "0"}).at("bound") == 7);
  CHECK(result_of({"sp", "order", "-g", "3"}).at("order") == 1451520);
  CHECK(result_of({"quad", "arf", "--form", "11"}).at("arf") == 1);
  CHECK(result_of({"quad", "eval", "--form", "00", "--vector", "11"}).at("value") == 1);
  CHECK(result_of({"quad", "reduce", "--form", "0110"}).at("verified") == true);
  CHECK(result_of({"surface", "transitivity", "--from", "00", "--to", "10"}).at("verified") == true);
  CHECK(result_of({"surface", "index", "--genus", "3"}).at("bound") == 36);
  CHECK(result_of({"torus", "index", "--spin", "10000"}).at("bound") == 31);
  CHECK(result_of({"torus", "generators", "-p", "3"}).at("closure_order") == 168);

  const auto orbits = result_of({"surface", "orbits", "--genus", "2"});
  CHECK(orbits.at("orbit_sizes") == Json::array({10, 6}));

  const auto witness = result_of({"surface", "witness-no-extension", "--genus", "1"});
  CHECK(witness.at("matrix") == Json::array({"01", "11"}));
  CHECK(witness.at("fixed_bounding_count") == 0);

  const auto semi = result_of({"group", "check-semidirect", "--ambient", "[1,2,0];[1,0,2]", "--normal", "[1,2,0]",
                               "--complement", "[1,0,2]", "--subgroup", "[1,0,2]"});
  CHECK(semi.at("lhs") == 3);
  CHECK(semi.at("rhs") == 3);
  CHECK(semi.at("ok") == true);
}

TEST_CASE("large counts are exact decimal strings") {
  const auto c = result_of({"surface", "count", "--genus", "100"});
  CHECK(c.at("b").is_string());
  CHECK(c.at("match") == true);
  CHECK(c.at("b").get<std::string>() ==
        "803469022129495137770981046171215126561215611592144769253376");
}

TEST_CASE("envelope") {
  const auto r = run({"torus", "t3-gate", "--signature", "4", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto j = Json::parse(r.out);
  CHECK(j.at("command") == "torus t3-gate");
  CHECK(j.at("params").at("signature") == 4);
  CHECK(j.at("seed").is_null());
  CHECK(j.at("tool_version") == spinext::cli::kToolVersion);
  CHECK(j.at("result").at("tag") == "InvalidSignature");

  const auto w = Json::parse(run({"surface", "witness-no-extension", "-g", "2", "--format", "json"}).out);
  CHECK(w.at("seed") == 20240229);
}

TEST_CASE("exit codes") {
  CHECK(run({"--help"}).code == 0);
  CHECK(run({}).code == 2);
  CHECK(run({"surface", "bogus"}).code == 2);
  CHECK(run({"quad", "arf", "--form", "101"}).code == 2);
  CHECK(run({"quad", "arf", "--form", "10x1"}).code == 2);
  CHECK(run({"surface", "orbits", "--genus", "9"}).code == 2);
  CHECK(run({"surface", "count", "--genus", "2", "--format", "xml"}).code == 2);

  const auto budget = run({"torus", "orbit", "--spin", "1111", "--budget", "3"});
  CHECK(budget.code == 1);
  const auto e = Json::parse(budget.err);
  CHECK(e.at("error").at("type") == "BudgetExceeded");
  CHECK(e.at("error").at("kind") == "computation");
  CHECK(budget.out.empty());

  CHECK(run({"surface", "transitivity", "--from", "00", "--to", "11"}).code == 1);
  CHECK(run({"group", "check-semidirect", "--ambient", "[1,2,0];[1,0,2]", "--normal", "[1,0,2]", "--complement",
             "[1,2,0]"})
            .code == 1);
}

TEST_CASE("budget environment variable; flag takes precedence") {
  {
    EnvGuard env("3");
    CHECK(run({"torus", "orbit", "--spin", "1111"}).code == 1);
    CHECK(run({"torus", "orbit", "--spin", "1111", "--budget", "100"}).code == 0);
  }
  {
    EnvGuard env("abc");
    CHECK(run({"torus", "orbit", "--spin", "1111"}).code == 2);
  }
  CHECK(run({"torus", "orbit", "--spin", "1111"}).code == 0);
}

TEST_CASE("repeated invocations are byte-identical") {
  const std::vector<std::vector<std::string>> cases = {
      {"surface", "witness-no-extension", "-g", "3", "--seed", "7", "--format", "json"},
      {"surface", "orbits", "-g", "3", "--format", "json"},
      {"quad", "reduce", "--form", "101101", "--format", "json"},
      {"sp", "order", "-g", "4", "--format", "csv"},
  };
  for (const auto& args : cases) {
    const auto first = run(args);
    REQUIRE(first.code == 0);
    CHECK(run(args).out == first.out);
  }
}

TEST_CASE("table and csv carry the json numbers") {
  const std::vector<std::string> base = {"surface", "count", "-g", "4"};
  auto with = [&](const char* fmt) {
    auto a = base;
    a.push_back("--format");
    a.push_back(fmt);
    return run(a).out;
  };
  const auto j = Json::parse(with("json")).at("result");
  const auto csv = with("csv");
  const auto table = with("table");
  CHECK(csv.rfind("key,value\n", 0) == 0);
  for (const char* k : {"b", "u", "formula_b", "formula_u"}) {
    const auto v = std::to_string(j.at(k).get<std::uint64_t>());
    CHECK(csv.find(std::string("\n") + k + "," + v + "\n") != std::string::npos);
    std::istringstream lines(table);
    bool seen = false;
    for (std::string line; std::getline(lines, line);) {
      std::istringstream fields(line);
      std::string key, value;
      fields >> key >> value;
      if (key == k) seen = value == v;
    }
    CHECK_MESSAGE(seen, k);
  }
}
