#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

// Drives the installed binary end to end through a shell, checking output
// and the documented exit codes.

namespace {

struct RunResult {
  int exit_code;
  std::string out;
  std::string err;
};

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

RunResult run(const std::string& args) {
  static int counter = 0;
  const auto dir = std::filesystem::temp_directory_path();
  const auto out = dir / ("punchline_cli_out_" + std::to_string(++counter));
  const auto err = dir / ("punchline_cli_err_" + std::to_string(counter));
  const std::string command = std::string(PUNCHLINE_CLI_PATH) + " " + args + " > " +
                              out.string() + " 2> " + err.string();
  const int status = std::system(command.c_str());
  RunResult result{WEXITSTATUS(status), slurp(out), slurp(err)};
  std::filesystem::remove(out);
  std::filesystem::remove(err);
  return result;
}

std::string kb(const char* name) {
  return std::string(PUNCHLINE_DATA_DIR) + "/" + name;
}

}  // namespace

TEST_CASE("analyze: json verdicts and determinism") {
  const std::string args =
      "analyze --kb " + kb("waitingroom.kb") + " --context t --punchline r";
  const RunResult first = run(args);
  REQUIRE(first.exit_code == 0);
  CHECK(first.out.find("\"surprising\": true") != std::string::npos);
  CHECK(first.out.find("\"potentially_funny\": false") != std::string::npos);
  CHECK(first.out.find("\"surprise_level\": \"0/1\"") != std::string::npos);
  const RunResult second = run(args);
  CHECK(first.out == second.out);
}

TEST_CASE("analyze: aliases resolve to the same report") {
  const RunResult direct = run("analyze --kb " + kb("waitingroom.kb") +
                               " --context t --punchline r");
  const RunResult aliased = run("analyze --kb " + kb("waitingroom.kb") +
                                " --context together --punchline reluctant");
  CHECK(direct.out == aliased.out);
}

TEST_CASE("analyze: the default order is lex") {
  const std::string base = "analyze --kb " + kb("waitingroom.kb") +
                           " --context 't & r' --punchline 't & !k'";
  const RunResult lex = run(base);
  REQUIRE(lex.exit_code == 0);
  CHECK(lex.out.find("\"revealing\": true") != std::string::npos);
  const RunResult bo = run(base + " --order bo");
  CHECK(bo.out.find("\"revealing\": false") != std::string::npos);
}

TEST_CASE("analyze: text format") {
  const RunResult r = run("analyze --kb " + kb("doctor.kb") +
                          " --context context --punchline punchline --format text");
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.find("surprising:         yes") != std::string::npos);
  CHECK(r.out.find("after context:") != std::string::npos);
}

TEST_CASE("analyze: elephants report the disregarded norm") {
  const RunResult r = run("analyze --kb " + kb("elephants.kb") +
                          " --context context --punchline punchline");
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.find("\"surprising\": null") != std::string::npos);
  CHECK(r.out.find("\"kind\": \"strict\"") != std::string::npos);
  CHECK(r.out.find("\"index\": 1") != std::string::npos);
}

TEST_CASE("cascade: three-part story") {
  const RunResult r = run("cascade --kb " + kb("waitingroom_norm.kb") +
                          " --part t --part r --part 't & !k' --format text");
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.find("step 1 statement:") != std::string::npos);
  CHECK(r.out.find("step 2 statement:") != std::string::npos);

  const RunResult bad = run("cascade --kb " + kb("waitingroom_norm.kb") + " --part t");
  CHECK(bad.exit_code == 2);
}

TEST_CASE("stratify prints strata and layers") {
  const RunResult r = run("stratify --kb " + kb("tweety.kb"));
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.find("strict stratum") != std::string::npos);
  CHECK(r.out.find("rank 1 (most specific)") != std::string::npos);
  CHECK(r.out.find("level 0 (impossible)") != std::string::npos);
}

TEST_CASE("models prints constrained and minimal models") {
  const RunResult r =
      run("models --kb " + kb("waitingroom.kb") + " --formula 't & r'");
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.find("Mod(P + formula):") != std::string::npos);
  CHECK(r.out.find("minimal models (bo): {¬k t ¬c r, k t ¬c r, k t c r}") !=
        std::string::npos);
  CHECK(r.out.find("minimal models (lex):") != std::string::npos);
}

TEST_CASE("check-km runs clean on the demo bases") {
  for (const char* name : {"waitingroom.kb", "doctor.kb", "tweety.kb"}) {
    const RunResult r =
        run("check-km --kb " + kb(name) + " --trials 100 --seed 42");
    CAPTURE(name);
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("no violations") != std::string::npos);
  }
}

TEST_CASE("exit codes for bad input") {
  CHECK(run("analyze --kb /nonexistent.kb --context a --punchline b").exit_code == 2);
  CHECK(run("analyze --kb " + kb("waitingroom.kb") +
            " --context 't &' --punchline r")
            .exit_code == 2);
  CHECK(run("analyze --kb " + kb("waitingroom.kb") +
            " --context nope --punchline r")
            .exit_code == 2);
  CHECK(run("frobnicate").exit_code == 2);
  CHECK(run("analyze --kb " + kb("waitingroom.kb") + " --context t").exit_code == 2);
}

TEST_CASE("exit code for an inconsistent knowledge base") {
  const auto path = std::filesystem::temp_directory_path() / "inconsistent_test.kb";
  {
    std::ofstream out(path);
    out << "strict: a\nstrict: !a\n";
  }
  CHECK(run("analyze --kb " + path.string() + " --context a --punchline a")
            .exit_code == 3);
  {
    std::ofstream out(path);
    out << "default: true ~> a\ndefault: true ~> !a\n";
  }
  CHECK(run("stratify --kb " + path.string()).exit_code == 3);
  std::filesystem::remove(path);
}
