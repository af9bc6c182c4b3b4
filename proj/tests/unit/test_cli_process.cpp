#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

namespace {

struct Result {
  int status = -1;
  std::string out;
};

// Runs the CLI through the shell; stderr is merged into the captured text.
Result run(const std::string& args, const std::string& input = "") {
  std::string cmd = std::string(LOCMULT_CLI) + " " + args + " 2>&1";
  std::filesystem::path in;
  if (!input.empty()) {
    in = std::filesystem::temp_directory_path() / "locmult_stdin.lmc";
    std::ofstream(in) << input;
    cmd += " < " + in.string();
  }
  Result r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe);
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string fixture(const char* name) { return std::string(LOCMULT_CORPUS_DIR) + "/" + name; }

const char* kPair = "ring Q[x, y, z]\nideal I = x*y - x^3, x*z\nideal J = y, z\nideal L = x\nideal U = 1 + x\n";

}  // namespace

TEST_CASE("chi on a file") {
  Result r = run("chi " + fixture("plane_union_parabola_vs_axis.lmc") + " I J");
  CHECK(r.status == 0);
  CHECK(r.out.find("chi: 1") != std::string::npos);
}

TEST_CASE("mult from standard input as json") {
  Result r = run("--json mult - T", "ring Q[t, x, y]\nideal T = t - x^2, t - y^2\n");
  CHECK(r.status == 0);
  CHECK(r.out.find("\"value\": 2") != std::string::npos);
  CHECK(r.out.find("\"method\": \"exact-hilbert-series\"") != std::string::npos);
}

TEST_CASE("exit statuses") {
  CHECK(run("chi - I L", kPair).status == 1);
  CHECK(run("mult - U", kPair).status == 1);
  CHECK(run("mult - K", kPair).status == 2);
  CHECK(run("frobnicate").status == 2);
  CHECK(run("mult - I", "ring Q[x]\nideal I = x + w\n").status == 2);
  CHECK(run("--max-n 2 chi - I J", kPair).status == 3);
  CHECK(run("--max-degree 1 gb - I", kPair).status == 3);
}

TEST_CASE("error messages name the problem") {
  Result parse = run("mult - I", "ring Q[x]\nideal I = x + w\n");
  CHECK(parse.out.find("unknown variable w") != std::string::npos);
  CHECK(parse.out.find("2:15") != std::string::npos);
  Result improper = run("chi - I L", kPair);
  CHECK(improper.out.find("error:") != std::string::npos);
  Result missing = run("mult /nonexistent/file.lmc I");
  CHECK(missing.status == 2);
}

TEST_CASE("report flags the equidimensionality caveat") {
  Result r = run("report - I J", kPair);
  CHECK(r.status == 0);
  CHECK(r.out.find("caveat") != std::string::npos);
  Result asserted = run("report --equidim - I J", kPair);
  CHECK(asserted.out.find("counterexample-candidate") != std::string::npos);
}

TEST_CASE("format is stable") {
  Result a = run("format " + fixture("dvr_flat_pairs.lmc"));
  CHECK(a.status == 0);
  Result b = run("format -", a.out);
  CHECK(b.status == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("corpus with a suite and ledger") {
  auto ledger = std::filesystem::temp_directory_path() / "locmult_cli_ledger.jsonl";
  std::filesystem::remove(ledger);
  Result r = run("corpus --suite vanishing --ledger " + ledger.string());
  CHECK(r.status == 0);
  CHECK(r.out.find("passed") != std::string::npos);
  CHECK(std::filesystem::file_size(ledger) > 0);
  std::filesystem::remove(ledger);
}
