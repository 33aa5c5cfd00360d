#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

#include "quademb/json_io.hpp"

using quademb::Json;

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(QUADEMB_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST_CASE("suslin subcommand") {
  const auto r = run("suslin --v 1,2 --w 3,4 --check --bar");
  REQUIRE(r.code == 0);
  const auto j = Json::parse(r.out);
  CHECK(j["S"]["entries"] == Json::parse(R"([["1","2"],["-4","3"]])"));
  CHECK(j["S_bar"]["entries"] == Json::parse(R"([["3","-2"],["4","1"]])"));
  CHECK(j["check"]["det"] == "11");
  CHECK(j["check"]["pass"] == true);
}

TEST_CASE("derive-j subcommand") {
  const auto r = run("derive-j --n 2");
  REQUIRE(r.code == 0);
  CHECK(Json::parse(r.out)["J"] == Json::parse(R"([["0","1"],["-1","0"]])"));
}

TEST_CASE("clifford, iso and catalog subcommands") {
  const auto mul = run("clifford mul --space hyperbolic:1 --a 2:1 --b 1:1");
  REQUIRE(mul.code == 0);
  CHECK(Json::parse(mul.out)["product"] == Json::parse(R"([{"mask":0,"coeff":"1"},{"mask":3,"coeff":"-1"}])"));
  const auto iso = run("iso --n 2");
  REQUIRE(iso.code == 0);
  CHECK(Json::parse(iso.out)["rank"] == 16);
  const auto cat = run("catalog --family odd2n1 --n 1");
  REQUIRE(cat.code == 0);
  CHECK(Json::parse(cat.out)["independent_monomials"] == 8);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run("").code == 2);
  CHECK(run("suslin --v 1,2").code == 2);
  CHECK(run("suslin --v 1,2 --w 3").code == 2);
  CHECK(run("iso --n 7").code == 2);
  CHECK(run("verify --suite nope").code == 2);
  CHECK(run("clifford mul --space diag:1 --a 5:1 --b 0:1").code == 2);
  CHECK(run("--help").code == 0);
}

TEST_CASE("verify is deterministic") {
  const auto a = run("verify --suite suslin --seed 3 --samples 5");
  const auto b = run("verify --suite suslin --seed 3 --samples 5");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(Json::parse(a.out)["pass"] == true);
}
