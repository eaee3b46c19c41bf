// End-to-end checks of the command-line binary: pinned outputs, exit codes,
// JSON report shape, determinism, and the QSL_KMAX cap.

#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(QSL_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    out.append(buf.data(), got);
  int status = pclose(pipe);
  int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return {code, out};
}

std::string stripped(std::string s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
  return s;
}

}  // namespace

TEST_CASE("immanant command prints pinned values") {
  RunResult r1 = run("imm --m 1 --n 1 --lambda 1 --rows 1");
  CHECK(r1.exit_code == 0);
  CHECK(stripped(r1.out) == "x_{11}");

  RunResult r2 = run("imm --m 1 --n 1 --lambda 2,2 --rows 1,1,2,2");
  CHECK(r2.exit_code == 0);
  CHECK(stripped(r2.out) == "0");

  RunResult r3 = run("imm --m 1 --n 1 --lambda 1 --rows 2");
  CHECK(r3.exit_code == 0);
  CHECK(stripped(r3.out) == "-x_{22}");
}

TEST_CASE("schur command prints pinned values") {
  RunResult r1 = run("schur --m 1 --n 1 --lambda 1");
  CHECK(r1.exit_code == 0);
  CHECK(stripped(r1.out) == "x1 + y1");

  RunResult r2 = run("schur --m 1 --n 1 --lambda 2,2");
  CHECK(r2.exit_code == 0);
  CHECK(stripped(r2.out) == "0");
}

TEST_CASE("series command prints pinned values") {
  RunResult r = run("series --kind gamma --k 1 --m 1 --n 1");
  CHECK(r.exit_code == 0);
  CHECK(stripped(r.out) == "x_{11} - x_{22}");
}

TEST_CASE("verify emits a JSON report and exit code zero on success") {
  RunResult r = run("verify ch11");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"suite\": \"ch11\"") != std::string::npos);
  CHECK(r.out.find("\"name\": \"cayley-hamilton-11\"") != std::string::npos);
  CHECK(r.out.find("\"status\": \"pass\"") != std::string::npos);
  CHECK(r.out.find("\"fail\"") == std::string::npos);
}

TEST_CASE("verify accepts spec invocations") {
  CHECK(run("verify ybe --m 2 --n 1").exit_code == 0);
  CHECK(run("verify macmahon --m 1 --n 1 --order 4").exit_code == 0);
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(run("bogus").exit_code == 2);
  CHECK(run("imm --m 1 --n 1 --lambda 1").exit_code == 2);   // missing --rows
  CHECK(run("imm --m 1 --n 1 --lambda 1 --rows 7").exit_code == 2);
  CHECK(run("verify nosuchsuite").exit_code == 2);
  CHECK(run("verify ybe --m 2").exit_code == 2);             // --m needs --n
  CHECK(run("series --kind delta --k 1").exit_code == 2);
}

TEST_CASE("experimental residual flag reports without asserting") {
  RunResult r = run("verify ch11 --experimental-ch21");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("characteristic-identity-21-residual") != std::string::npos);
  CHECK(r.out.find("\"status\": \"reported\"") != std::string::npos);
}

TEST_CASE("identical flags yield byte-identical output") {
  RunResult a = run("verify rtt --m 1 --n 1 --seed 7 --format json");
  RunResult b = run("verify rtt --m 1 --n 1 --seed 7 --format json");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("QSL_KMAX caps the series order") {
  RunResult r = run("series --kind gamma --k 3 --m 1 --n 1");
  CHECK(r.exit_code == 0);
  RunResult capped = [] {
    std::string cmd = "env QSL_KMAX=2 " + std::string(QSL_CLI_PATH) +
                      " series --kind gamma --k 3 --m 1 --n 1 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
      out.append(buf.data(), got);
    int status = pclose(pipe);
    return RunResult{WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
  }();
  CHECK(capped.exit_code == 2);
}

TEST_CASE("q specialization evaluates coefficients") {
  RunResult r = run("series --kind gamma --k 1 --m 1 --n 1 --q 2/3");
  CHECK(r.exit_code == 0);
  CHECK(stripped(r.out) == "x_{11} - x_{22}");
}
