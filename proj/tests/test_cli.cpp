#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <string>

// End-to-end checks against the built CLI binary. The test runner passes
// its location via STERN_CLI_BIN; without it these cases are skipped.

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

std::string cli_path() {
  const char* p = std::getenv("STERN_CLI_BIN");
  return p ? std::string(p) : std::string();
}

RunResult run_cli(const std::string& args) {
  const std::string cmd = "\"" + cli_path() + "\" " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  std::size_t got = 0;
  while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) r.out.append(buf, got);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

#define REQUIRE_CLI()                                   \
  do {                                                  \
    if (cli_path().empty()) SKIP("STERN_CLI_BIN unset"); \
  } while (0)

}  // namespace

TEST_CASE("cli poly") {
  REQUIRE_CLI();
  CHECK(run_cli("poly 3").out == "x + y\n");
  CHECK(run_cli("poly 8").out == "1\n");
  CHECK(run_cli("poly 3").exit_code == 0);
  const std::string want =
      R"({"terms":[{"i":2,"j":0,"c":"1"},{"i":2,"j":1,"c":"2"},{"i":1,"j":2,"c":"2"},)"
      R"({"i":0,"j":3,"c":"1"},{"i":2,"j":2,"c":"1"},{"i":1,"j":3,"c":"1"}]})"
      "\n";
  CHECK(run_cli("poly 21 --format json").out == want);
  CHECK(run_cli("--format json poly 21").out == want);
}

TEST_CASE("cli value") {
  REQUIRE_CLI();
  CHECK(run_cli("value 5").out == "3\n");
  CHECK(run_cli("value 11").out == "5\n");
  CHECK(run_cli("value 1024").out == "1\n");
  CHECK(run_cli("value 18446744073709551615").out == "64\n");
}

TEST_CASE("cli expansions") {
  REQUIRE_CLI();
  CHECK(run_cli("expansions 20").out ==
        "10012\n10020\n10100\n1212\n1220\n2012\n2020\n2100\ncount: 8\n");
  CHECK(run_cli("expansions 0").out == "()\ncount: 1\n");
  CHECK(run_cli("expansions 18 --format json").out ==
        "[\"10002\",\"10010\",\"1122\",\"1202\",\"1210\",\"2002\",\"2010\"]\n");
}

TEST_CASE("cli reverse and runs") {
  REQUIRE_CLI();
  CHECK(run_cli("reverse 19").out == "25\n");
  CHECK(run_cli("reverse 12").out == "3\n");
  CHECK(run_cli("reverse 1").out == "1\n");
  CHECK(run_cli("runs 11").out == "1 1 2\n");
  CHECK(run_cli("runs 7 --format json").out == "[3]\n");
}

TEST_CASE("cli table") {
  REQUIRE_CLI();
  const std::string want =
      "n,n_reversed,stern_value,polynomial,num_expansions\n"
      "1,1,1,\"1\",1\n"
      "2,1,1,\"1\",1\n"
      "3,3,2,\"x + y\",2\n"
      "4,1,1,\"1\",1\n"
      "5,5,3,\"x + x*y + y^2\",3\n"
      "6,3,2,\"x + y\",2\n";
  CHECK(run_cli("table --max 6 --format csv").out == want);
  CHECK(run_cli("table --max 6").out == want);
  CHECK(run_cli("table --max 3 --format json").out ==
        R"([{"n":1,"n_reversed":1,"stern_value":1,"polynomial":"1","num_expansions":1},)"
        R"({"n":2,"n_reversed":1,"stern_value":1,"polynomial":"1","num_expansions":1},)"
        R"({"n":3,"n_reversed":3,"stern_value":2,"polynomial":"x + y","num_expansions":2}])"
        "\n");
}

TEST_CASE("cli verify targets") {
  REQUIRE_CLI();
  const RunResult lemma = run_cli("verify lemma");
  CHECK(lemma.out == "checked: 8, failures: 0\n");
  CHECK(lemma.exit_code == 0);

  CHECK(run_cli("verify continuant --max 999").out == "checked: 500, failures: 0\n");
  CHECK(run_cli("verify reflection --max 8").out == "checked: 511, failures: 0\n");
  CHECK(run_cli("verify oracle --max 256").out == "checked: 256, failures: 0\n");
  CHECK(run_cli("verify powers --max 1024").out == "checked: 1024, failures: 0\n");
  CHECK(run_cli("verify reversal --max 2048").out == "checked: 2048, failures: 0\n");
  CHECK(run_cli("verify reversal --mode integer --max 100000").exit_code == 0);

  const std::string json = run_cli("verify lemma --format json").out;
  CHECK(json.rfind("{\"checked\":8,\"failures\":[],\"elapsed_ms\":", 0) == 0);
}

TEST_CASE("cli verify is reproducible across worker counts") {
  REQUIRE_CLI();
  const RunResult one = run_cli("verify oracle --max 256 --workers 1");
  const RunResult four = run_cli("verify oracle --max 256 --workers 4");
  CHECK(one.out == four.out);
  CHECK(one.exit_code == four.exit_code);
}

TEST_CASE("cli usage errors exit with code 2") {
  REQUIRE_CLI();
  CHECK(run_cli("").exit_code == 2);
  CHECK(run_cli("bogus").exit_code == 2);
  CHECK(run_cli("poly").exit_code == 2);
  CHECK(run_cli("poly 0").exit_code == 2);
  CHECK(run_cli("poly abc").exit_code == 2);
  CHECK(run_cli("poly 3 --format csv").exit_code == 2);
  CHECK(run_cli("runs 6").exit_code == 2);
  CHECK(run_cli("verify nonsense").exit_code == 2);
  CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("cli output is byte stable across runs") {
  REQUIRE_CLI();
  const std::string a = run_cli("table --max 64 --format csv").out;
  const std::string b = run_cli("table --max 64 --format csv").out;
  CHECK_FALSE(a.empty());
  CHECK(a == b);
}
