#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <nlohmann/json.hpp>
#include <string>

#include "bracelab/catalog.hpp"
#include "bracelab/io.hpp"
#include "bracelab/solution.hpp"

#ifndef BRACELAB_CLI
#error "BRACELAB_CLI must point at the CLI binary"
#endif
#ifndef BRACELAB_DATA_DIR
#error "BRACELAB_DATA_DIR must point at the sample data"
#endif

namespace {

const std::string kCli = BRACELAB_CLI;
const std::string kData = BRACELAB_DATA_DIR;

struct RunResult {
  int exit_code;
  std::string output;  // stdout and stderr combined
};

RunResult run(const std::string& args) {
  std::string cmd = kCli + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string output;
  std::array<char, 4096> buf;
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    output.append(buf.data(), got);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, output};
}

}  // namespace

TEST_CASE("validate reports success and failure with exit codes") {
  RunResult ok = run("validate " + kData + "/neg-z4.brace");
  REQUIRE(ok.exit_code == 0);
  REQUIRE(ok.output == "kind: brace\norder: 4\nvalid: true\n");

  RunResult sol = run("validate " + kData + "/twist3.sol");
  REQUIRE(sol.exit_code == 0);
  REQUIRE(sol.output == "kind: solution\nsize: 3\nvalid: true\n");

  RunResult bad = run("validate " + kData + "/broken.brace");
  REQUIRE(bad.exit_code == 1);
  REQUIRE(bad.output ==
          "error: NotAGroup in mul: associativity fails at (a,b,c)=(1,2,2)\n");

  RunResult axiom = run("validate " + kData + "/axiom-broken.brace");
  REQUIRE(axiom.exit_code == 1);
  REQUIRE(axiom.output == "error: BraceAxiomViolated at (a,b,c)=(2,1,1)\n");

  REQUIRE(run("validate no-such-file").exit_code == 1);
}

TEST_CASE("analyze emits the full golden report for neg-Z4") {
  RunResult r = run("analyze " + kData + "/neg-z4.brace");
  REQUIRE(r.exit_code == 0);
  REQUIRE(r.output ==
          "name: neg-Z4\n"
          "order: 4\n"
          "abelian: false\n"
          "dedekind: true\n"
          "socle: {0,2}\n"
          "centre: {0,2}\n"
          "socle-series: {0} {0,2} {0,1,2,3}\n"
          "multipermutation-level: 2\n"
          "left-series: {0,1,2,3} {0,2} {0}\n"
          "left-nilpotent: true\n"
          "left-class: 3\n"
          "right-series: {0,1,2,3} {0,2} {0}\n"
          "right-nilpotent: true\n"
          "right-class: 3\n"
          "centrally-nilpotent: true\n"
          "right-nil-2: false\n"
          "left-nil-2: false\n"
          "right-nil-3: true\n"
          "left-nil-3: true\n"
          "solution-twist: false\n"
          "solution-diagonal-fixed: false\n"
          "retraction-sizes: 4 2 1\n"
          "solution-level: 2\n");
}

TEST_CASE("analyze shows dedekind witnesses and handles solutions") {
  RunResult r = run("analyze " + kData + "/neg-z6.brace");
  REQUIRE(r.exit_code == 0);
  REQUIRE(r.output.find("dedekind: false\n") != std::string::npos);
  REQUIRE(r.output.find("dedekind-witness: {0,3}\n") != std::string::npos);
  REQUIRE(r.output.find("dedekind-witness-star: star(3,1)=4\n") != std::string::npos);
  REQUIRE(r.output.find("left-nilpotent: false\n") != std::string::npos);
  REQUIRE(r.output.find("left-class") == std::string::npos);

  RunResult s = run("analyze " + kData + "/twist5.sol");
  REQUIRE(s.exit_code == 0);
  REQUIRE(s.output ==
          "size: 5\n"
          "twist: true\n"
          "diagonal-fixed: true\n"
          "retraction-sizes: 5 1\n"
          "multipermutation-level: 1\n");
}

TEST_CASE("json output carries the same fields") {
  RunResult r = run("analyze " + kData + "/neg-z4.brace --format json");
  REQUIRE(r.exit_code == 0);
  nlohmann::json j = nlohmann::json::parse(r.output);
  REQUIRE(j["name"] == "neg-Z4");
  REQUIRE(j["order"] == 4);
  REQUIRE(j["dedekind"] == true);
  REQUIRE(j["socle"] == nlohmann::json({0, 2}));
  REQUIRE(j["socle-series"].size() == 3);
  REQUIRE(j["retraction-sizes"] == nlohmann::json({4, 2, 1}));
  REQUIRE(j["solution-level"] == 2);
}

TEST_CASE("solution, retract and level commands chain together") {
  auto tmp = std::filesystem::temp_directory_path();
  std::string sol = (tmp / "bracelab_cli_b4.sol").string();
  RunResult r = run("solution " + kData + "/neg-z4.brace -o " + sol);
  REQUIRE(r.exit_code == 0);
  REQUIRE(r.output == "size: 4\nsaved: " + sol + "\n");

  RunResult ret = run("retract " + sol);
  REQUIRE(ret.exit_code == 0);
  REQUIRE(ret.output == "size: 4\nclasses: {0,2} {1,3}\nquotient-size: 2\n");

  RunResult lvl = run("level " + sol);
  REQUIRE(lvl.exit_code == 0);
  REQUIRE(lvl.output == "2\n");

  REQUIRE(run("level " + kData + "/twist5.sol").output == "1\n");
  std::remove(sol.c_str());

  // a solution that stalls above one point reports "none"
  std::string stall = (tmp / "bracelab_cli_stall.sol").string();
  bracelab::save_solution(
      bracelab::validate_solution(
          {{0, 1, 3, 2}, {2, 3, 1, 0}, {3, 2, 0, 1}, {1, 0, 2, 3}},
          {{0, 3, 2, 1}, {3, 0, 1, 2}, {1, 2, 3, 0}, {2, 1, 0, 3}}),
      stall);
  REQUIRE(run("level " + stall).output == "none\n");
  std::remove(stall.c_str());
}

TEST_CASE("subbraces command lists ideals deterministically") {
  RunResult r = run("subbraces " + kData + "/neg-z4.brace");
  REQUIRE(r.exit_code == 0);
  REQUIRE(r.output ==
          "order: 4\n"
          "count: 3\n"
          "subbrace-0: {0} ideal=true\n"
          "subbrace-1: {0,2} ideal=true\n"
          "subbrace-2: {0,1,2,3} ideal=true\n"
          "dedekind: true\n");

  RunResult r6 = run("subbraces " + kData + "/neg-z6.brace");
  REQUIRE(r6.output.find("subbrace-1: {0,3} ideal=false witness star(3,1)=4\n") !=
          std::string::npos);
  REQUIRE(r6.output.find("dedekind: false\n") != std::string::npos);
}

TEST_CASE("quotient command") {
  RunResult r = run("quotient " + kData + "/neg-z4.brace --ideal 0,2");
  REQUIRE(r.exit_code == 0);
  REQUIRE(r.output ==
          "order: 4\n"
          "ideal: {0,2}\n"
          "quotient-order: 2\n"
          "projection: 0 1 0 1\n");

  RunResult bad = run("quotient " + kData + "/neg-z6.brace --ideal 0,3");
  REQUIRE(bad.exit_code == 1);
  REQUIRE(bad.output == "error: NotAnIdeal: witness star(3,1)=4\n");
}

TEST_CASE("enumerate command is strategy-agnostic") {
  RunResult t = run("enumerate --order 4 --strategy tables");
  RunResult l = run("enumerate --order 4 --strategy lambda");
  REQUIRE(t.exit_code == 0);
  REQUIRE(l.exit_code == 0);
  // everything after the strategy line must coincide
  auto strip = [](const std::string& s) {
    auto pos = s.find('\n', s.find("strategy: "));
    return s.substr(pos);
  };
  REQUIRE(strip(t.output) == strip(l.output));

  RunResult capped = run("enumerate --order 7 --strategy tables");
  REQUIRE(capped.exit_code == 1);
  REQUIRE(capped.output == "error: OrderCapExceeded: order 7 exceeds cap 6\n");
}

TEST_CASE("zbrace subcommands print exact coefficient arithmetic") {
  REQUIRE(run("zbrace star 3 1").output == "-2\n");
  REQUIRE(run("zbrace mul 2 3").output == "5\n");
  REQUIRE(run("zbrace mul 1 1").output == "0\n");
  REQUIRE(run("zbrace socle 2").output == "true\n");
  REQUIRE(run("zbrace socle 3").output == "false; witness star(3a,a) = -2a\n");
  REQUIRE(run("zbrace ideal-check 3").output ==
          "not ideal; witness star(3a,a) = -2a\n");
  REQUIRE(run("zbrace ideal-check 2").output == "ideal\n");
  REQUIRE(run("zbrace ideal-check 1").output == "ideal\n");
  REQUIRE(run("zbrace dedekind abelian").output == "dedekind\n");
  REQUIRE(run("zbrace dedekind non-abelian").output ==
          "not dedekind; witness subgroup 3Z with star(3a,a) = -2a\n");
  // big integers flow through exactly
  REQUIRE(run("zbrace star 3 170141183460469231731687303715884105727").output ==
          "-340282366920938463463374607431768211454\n");
}

TEST_CASE("usage errors exit with 2") {
  REQUIRE(run("no-such-command").exit_code == 2);
  REQUIRE(run("validate").exit_code == 2);
  REQUIRE(run("enumerate --order 4 --strategy bogus").exit_code == 2);
  REQUIRE(run("zbrace star 1").exit_code == 2);
  REQUIRE(run("zbrace dedekind maybe").exit_code == 2);
}

TEST_CASE("byte-identical output across runs") {
  for (const std::string& cmd :
       {std::string("analyze ") + kData + "/neg-z6.brace",
        std::string("analyze ") + kData + "/neg-z4.brace --format json",
        std::string("subbraces ") + kData + "/neg-z6.brace",
        std::string("enumerate --order 4 --strategy tables")}) {
    RunResult a = run(cmd);
    RunResult b = run(cmd);
    REQUIRE(a.exit_code == 0);
    REQUIRE(a.exit_code == b.exit_code);
    REQUIRE(a.output == b.output);
  }
}

TEST_CASE("BRACELAB_CAP overrides enumeration caps") {
  REQUIRE(run("enumerate --order 7 --strategy tables").exit_code == 1);

  std::string full =
      "BRACELAB_CAP=7 " + kCli + " enumerate --order 7 --strategy tables 2>&1";
  FILE* pipe = popen(full.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string output;
  std::array<char, 4096> buf;
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    output.append(buf.data(), got);
  int status = pclose(pipe);
  REQUIRE(WIFEXITED(status));
  REQUIRE(WEXITSTATUS(status) == 0);
  REQUIRE(output.find("count: ") != std::string::npos);
}
