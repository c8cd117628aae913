// End-to-end checks of the qframe binary: exit codes, determinism, file
// round trips and both report formats.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#ifndef QFRAME_CLI_PATH
#error "QFRAME_CLI_PATH must point at the built binary"
#endif

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct RunResult {
  int exit_code;
  std::string output;
};

/// Runs the CLI with stdout+stderr captured to a scratch file.
RunResult run_cli(const std::string& args) {
  static int counter = 0;
  const fs::path capture =
      fs::temp_directory_path() / ("qframe_cli_out_" +
                                   std::to_string(counter++) + ".txt");
  const std::string command = std::string(QFRAME_CLI_PATH) + " " + args +
                              " > " + capture.string() + " 2>&1";
  const int raw = std::system(command.c_str());
  RunResult result;
  result.exit_code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  std::ifstream in(capture);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  result.output = buffer.str();
  fs::remove(capture);
  return result;
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

struct Scratch {
  fs::path dir;
  Scratch() {
    dir = fs::temp_directory_path() /
          ("qframe_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(dir);
  }
  ~Scratch() { fs::remove_all(dir); }
  std::string path(const std::string& name) const {
    return (dir / name).string();
  }
};

}  // namespace

TEST_CASE("gen-example writes deterministic families") {
  Scratch scratch;
  const std::string a = scratch.path("a.json");
  const std::string b = scratch.path("b.json");

  CHECK(run_cli("gen-example --kind duplicated-basis -n 2 --output " + a)
            .exit_code == 0);
  const json dup = json::parse(read_file(a));
  CHECK(dup["dimension"] == 2);
  CHECK(dup["vectors"].size() == 4);
  CHECK(dup["vectors"][0][0][0] == 1.0);
  CHECK(dup["vectors"][1][0][0] == 1.0);
  CHECK(dup["vectors"][2][1][0] == 1.0);

  CHECK(run_cli("gen-example --kind orthonormal -n 3 --output " + a)
            .exit_code == 0);
  CHECK(json::parse(read_file(a))["vectors"].size() == 3);

  CHECK(run_cli("gen-example --kind random-frame -n 3 --seed 7 --output " + a)
            .exit_code == 0);
  CHECK(run_cli("gen-example --kind random-frame -n 3 --seed 7 --output " + b)
            .exit_code == 0);
  CHECK(read_file(a) == read_file(b));  // byte-identical

  CHECK(run_cli("gen-example --kind random-frame -n 3 --seed 8 --output " + b)
            .exit_code == 0);
  CHECK(read_file(a) != read_file(b));

  CHECK(run_cli("gen-example --kind bogus -n 3 --output " + a).exit_code == 2);
  CHECK(run_cli("gen-example --kind orthonormal -n 0 --output " + a)
            .exit_code == 2);
}

TEST_CASE("report on the duplicated basis passes") {
  Scratch scratch;
  const std::string frame = scratch.path("dup.json");
  REQUIRE(run_cli("gen-example --kind duplicated-basis -n 4 --output " + frame)
              .exit_code == 0);

  const RunResult text = run_cli("report " + frame);
  CHECK(text.exit_code == 0);
  CHECK(text.output.find("bounds.lower = 2") != std::string::npos);
  CHECK(text.output.find("bounds.upper = 2") != std::string::npos);
  CHECK(text.output.find("report.pass = true") != std::string::npos);

  const RunResult structured =
      run_cli("report " + frame + " --format structured");
  CHECK(structured.exit_code == 0);
  const json doc = json::parse(structured.output);
  CHECK(doc["pass"] == true);
  CHECK(doc["facts"]["bounds.lower"].get<double>() ==
        doctest::Approx(2.0).epsilon(1e-9));
  CHECK(doc["facts"]["bounds.is_tight"] == true);
  CHECK(doc["checks"].size() > 0);
  for (const auto& check : doc["checks"]) CHECK(check["pass"] == true);
}

TEST_CASE("reports are deterministic apart from timing") {
  Scratch scratch;
  const std::string frame = scratch.path("rnd.json");
  REQUIRE(run_cli("gen-example --kind random-frame -n 3 --seed 5 --output " +
                  frame)
              .exit_code == 0);
  const RunResult first = run_cli("report " + frame + " --format structured");
  const RunResult second = run_cli("report " + frame + " --format structured");
  json a = json::parse(first.output);
  json b = json::parse(second.output);
  a.erase("timing_ms");
  b.erase("timing_ms");
  CHECK(a == b);
}

TEST_CASE("non-frame input fails the report with exit 1") {
  Scratch scratch;
  const std::string frame = scratch.path("thin.json");
  std::ofstream out(frame);
  out << R"({"dimension": 2, "vectors": [[[1,0,0,0],[0,0,0,0]]]})";
  out.close();

  const RunResult report = run_cli("report " + frame);
  CHECK(report.exit_code == 1);
  CHECK(report.output.find("bounds.is_frame = false") != std::string::npos);

  CHECK(run_cli("bounds " + frame).exit_code == 1);
  CHECK(run_cli("dual " + frame).exit_code == 1);
}

TEST_CASE("bounds subcommand") {
  Scratch scratch;
  const std::string frame = scratch.path("ortho.json");
  REQUIRE(run_cli("gen-example --kind orthonormal -n 2 --output " + frame)
              .exit_code == 0);
  const RunResult result = run_cli("bounds " + frame);
  CHECK(result.exit_code == 0);
  CHECK(result.output.find("bounds.is_parseval = true") != std::string::npos);
}

TEST_CASE("dual writes a verifiable canonical dual") {
  Scratch scratch;
  const std::string frame = scratch.path("dup.json");
  const std::string dual = scratch.path("dual.json");
  REQUIRE(run_cli("gen-example --kind duplicated-basis -n 3 --output " + frame)
              .exit_code == 0);

  CHECK(run_cli("dual " + frame + " --dual-output " + dual).exit_code == 0);
  const json dual_doc = json::parse(read_file(dual));
  CHECK(dual_doc["dimension"] == 3);
  CHECK(dual_doc["vectors"][0][0][0] == 0.5);

  CHECK(run_cli("verify-dual " + frame + " " + dual).exit_code == 0);
}

TEST_CASE("verify-dual distinguishes duals from non-duals") {
  Scratch scratch;
  const std::string frame = scratch.path("dup.json");
  const std::string scaled = scratch.path("scaled.json");
  const std::string small = scratch.path("small.json");
  REQUIRE(run_cli("gen-example --kind duplicated-basis -n 2 --output " + frame)
              .exit_code == 0);

  // the frame itself is twice its canonical dual, so as a candidate it
  // reconstructs 2u instead of u
  std::ofstream out(scaled);
  out << read_file(frame);
  out.close();
  const RunResult fail = run_cli("verify-dual " + frame + " " + scaled);
  CHECK(fail.exit_code == 1);
  CHECK(fail.output.find("pass = false") != std::string::npos);

  REQUIRE(run_cli("gen-example --kind duplicated-basis -n 3 --output " + small)
              .exit_code == 0);
  CHECK(run_cli("verify-dual " + frame + " " + small).exit_code == 2);
}

TEST_CASE("project subcommand") {
  Scratch scratch;
  const std::string frame = scratch.path("dup.json");
  const std::string span = scratch.path("line.json");
  const std::string projected = scratch.path("projected.json");
  REQUIRE(run_cli("gen-example --kind duplicated-basis -n 2 --output " + frame)
              .exit_code == 0);
  std::ofstream out(span);
  out << R"({"dimension": 2, "vectors": [[[1,0,0,0],[0,0,0,0]]]})";
  out.close();

  const RunResult result = run_cli("project " + frame + " " + span +
                                   " --projected-output " + projected);
  CHECK(result.exit_code == 0);
  CHECK(result.output.find("commutation.coherent = true") !=
        std::string::npos);
  const json doc = json::parse(read_file(projected));
  CHECK(doc["vectors"].size() == 4);
}

TEST_CASE("input and usage errors exit with 2") {
  Scratch scratch;
  CHECK(run_cli("report /nonexistent/frame.json").exit_code == 2);

  const std::string junk = scratch.path("junk.json");
  std::ofstream out(junk);
  out << "{ not json";
  out.close();
  CHECK(run_cli("report " + junk).exit_code == 2);

  const std::string ragged = scratch.path("ragged.json");
  std::ofstream rout(ragged);
  rout << R"({"dimension": 2, "vectors": [[[1,0,0]]]})";
  rout.close();
  CHECK(run_cli("report " + ragged).exit_code == 2);

  CHECK(run_cli("no-such-command").exit_code == 2);
  CHECK(run_cli("").exit_code == 2);
}

TEST_CASE("version flag") {
  const RunResult result = run_cli("--version");
  CHECK(result.exit_code == 0);
  CHECK(result.output.find("qframe") != std::string::npos);
}
