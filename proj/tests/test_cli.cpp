#include <sys/wait.h>

#include <cstdio>
#include <sstream>

#include "doctest.h"
#include "fgt/cli.hpp"
#include "fgt/errors.hpp"

using namespace fgt;
using namespace fgt::cli;
using json_io::Json;

namespace {

struct Outcome {
  int code;
  std::string out, err;
};

Outcome run(const std::string& sub, std::map<std::string, std::string> params,
            OutputFormat format = OutputFormat::Json) {
  std::ostringstream out, err;
  int code = dispatch({sub, std::move(params), format}, out, err);
  return {code, out.str(), err.str()};
}

Outcome run_binary(const std::string& args) {
  const std::string cmd = std::string(FGT_BINARY) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string text;
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof buf, pipe)) text.append(buf, n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, text, ""};
}

}  // namespace

TEST_CASE("orders example") {
  auto r = run("orders", {{"family", "PSL"}, {"n", "4"}, {"q", "3"}});
  REQUIRE(r.code == 0);
  auto j = Json::parse(r.out);
  CHECK(j["order"] == "6065280");
  CHECK(j["label"] == "PSL_4(3)");
  CHECK(j["family"] == "PSL");
  CHECK(j["params"] == Json({{"n", "4"}, {"q", "3"}}));
  CHECK(j["exceptions"] == Json::array());
  CHECK(json_io::to_bigint(j["order"]) == 6065280);
}

TEST_CASE("moonshine example") {
  auto r = run("moonshine", {{"j", "true"}, {"terms", "3"}});
  REQUIRE(r.code == 0);
  auto j = Json::parse(r.out);
  CHECK(j["j"]["coefficients"] == Json({"1", "744", "196884", "21493760", "864299970"}));
  CHECK(j["j"]["leading_exponent"] == "-1");
}

TEST_CASE("group report example") {
  auto r = run("group", {{"name", "alt"}, {"n", "5"}, {"report", "true"}});
  REQUIRE(r.code == 0);
  auto j = Json::parse(r.out);
  CHECK(j["order"] == "60");
  CHECK(j["simple"] == true);
  CHECK(j["classes"] == Json({"1", "15", "20", "12", "12"}));
}

TEST_CASE("JSON output round-trips byte for byte") {
  const std::vector<std::pair<std::string, std::map<std::string, std::string>>> requests = {
      {"field", {{"p", "2"}, {"f", "3"}, {"elements", "true"}}},
      {"group", {{"gens", "(0 1 2 3);(0 2)"}, {"degree", "4"}, {"report", "true"}, {"histogram", "true"}}},
      {"zoo", {{"abelian", "72"}, {"partitions", "30"}}},
      {"chartab", {{"name", "alternating"}, {"n", "4"}}},
      {"census", {{"bound", "1000"}}},
      {"golay", {{"steiner", "true"}}},
      {"leech", {{"theta", "4"}}},
      {"moonshine", {{"monster", "true"}, {"decompositions", "true"}}},
      {"algebra", {{"kind", "O"}, {"probe", "5"}}},
      {"sporadic", {}},
  };
  for (const auto& [sub, params] : requests) {
    INFO(sub);
    auto r = run(sub, params);
    REQUIRE(r.code == 0);
    CHECK(json_io::dump(Json::parse(r.out)) == r.out);
    // Deterministic: a second run gives the same bytes.
    CHECK(run(sub, params).out == r.out);
  }
}

TEST_CASE("numbers are decimal strings") {
  auto r = run("sporadic", {{"symbol", "M"}});
  auto j = Json::parse(r.out);
  CHECK(j["order"] == "808017424794512875886459904961710757005754368000000000");
  CHECK(j["generation"].is_string());
}

TEST_CASE("exit statuses per error class") {
  CHECK(run("orders", {{"family", "2B2"}, {"q", "4"}}).code == kExitValidation);
  CHECK(run("field", {{"p", "6"}}).code == kExitValidation);
  CHECK(run("algebra", {{"kind", "H"}, {"a", "1/0,0,0,0"}, {"op", "inverse"}}).code == kExitValidation);
  CHECK(run("chartab", {{"name", "symmetric"}, {"n", "7"}}).code == kExitResource);
  CHECK(run("group", {{"name", "symmetric"}, {"n", "12"}, {"histogram", "true"}}).code == kExitResource);
  CHECK(run("nope", {}).code == kExitUsage);
  CHECK(run("orders", {{"family", "PSL"}, {"bogus", "1"}}).code == kExitUsage);
  CHECK(run("orders", {{"family", "PSL"}, {"n", "x"}, {"q", "3"}}).code == kExitUsage);
  CHECK(run("zoo", {}).code == kExitUsage);
  auto bad = run("census", {{"bound", "100000000"}});
  CHECK(bad.code == kExitResource);
  CHECK(bad.err.find("error (resource)") != std::string::npos);
  CHECK(exit_code_for(DefectError("x")) == kExitDefect);
  CHECK(exit_code_for(ConfigurationError("x")) == kExitResource);
  CHECK(exit_code_for(DomainError("x")) == kExitValidation);
}

TEST_CASE("text output") {
  auto r = run("orders", {{"family", "G2"}, {"q", "2"}}, OutputFormat::Text);
  CHECK(r.out.find("order: 12096") != std::string::npos);
  CHECK(r.out.find("label: G2(2)") != std::string::npos);
}

TEST_CASE("every listed subcommand dispatches") {
  for (const auto& spec : command_specs()) {
    auto r = run(spec.name, {{"definitely-not-a-param", "1"}});
    CHECK(r.code == kExitUsage);
  }
}

TEST_CASE("binary: exit codes and flags") {
  CHECK(run_binary("orders --family PSL --n 4 --q 3").out.find("\"6065280\"") != std::string::npos);
  CHECK(run_binary("--format text orders --family PSL --n 2 --q 11").out.find("order: 660") != std::string::npos);
  CHECK(run_binary("orders --family PSL --n 2 --q 11 --format text").code == 0);
  CHECK(run_binary("orders --family 2G2 --q 9").code == 2);
  CHECK(run_binary("chartab --name sym --n 6").code == 3);
  CHECK(run_binary("frobnicate").code == 64);
  CHECK(run_binary("orders --family PSL --wrong 1").code == 64);
  CHECK(run_binary("--help").code == 0);
  CHECK(run_binary("verify-all --only 1,7").code == 0);
}

TEST_CASE("binary: resource bounds from the environment") {
  const std::string bin = FGT_BINARY;
  auto with_env = [&](const std::string& env, const std::string& args) {
    const std::string cmd = env + " " + bin + " " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  };
  CHECK(with_env("FGT_CHARACTER_BOUND=10", "chartab --name sym --n 4") == 3);
  CHECK(with_env("FGT_CHARACTER_BOUND=1000", "chartab --name sym --n 6") == 0);
  CHECK(with_env("FGT_CHARACTER_BOUND=banana", "orders --family G2 --q 2") == 2);
}
