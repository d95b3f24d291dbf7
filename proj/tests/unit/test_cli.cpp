// Runs the torusobs executable and checks its output and exit codes.

#include "torusobs/oracle.hpp"

#include <doctest.h>
#include <json.hpp>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

const std::string kCli = TORUSOBS_CLI;
const std::string kSource = TORUSOBS_SOURCE_DIR;

struct Run {
  int status = -1;
  std::string out;
  std::string err;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::string quote(const std::string& s) {
  std::string q = "'";
  for (char c : s) q += c == '\'' ? std::string("'\\''") : std::string(1, c);
  return q + "'";
}

Run run(const std::string& args, const std::string& stdin_text = "") {
  const auto dir = std::filesystem::temp_directory_path();
  const std::string tag = std::to_string(::getpid()) + "_" + std::to_string(std::rand());
  const std::string out = (dir / ("cli_out_" + tag)).string();
  const std::string err = (dir / ("cli_err_" + tag)).string();
  const std::string in = (dir / ("cli_in_" + tag)).string();
  std::ofstream(in) << stdin_text;
  const std::string cmd = quote(kCli) + " " + args + " <" + quote(in) + " >" + quote(out) + " 2>" + quote(err);
  const int raw = std::system(cmd.c_str());
  Run r{WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, slurp(out), slurp(err)};
  std::filesystem::remove(out);
  std::filesystem::remove(err);
  std::filesystem::remove(in);
  return r;
}

std::string example(const std::string& name) { return quote(kSource + "/data/examples/" + name); }

nlohmann::ordered_json masked(const std::string& text) {
  auto j = nlohmann::ordered_json::parse(text);
  j["tool_version"] = "<masked>";
  return j;
}

}  // namespace

TEST_CASE("analyze prints a verdict and exits 0 either way") {
  Run r = run("analyze " + example("hyperbola.json"));
  CHECK(r.status == 0);
  CHECK(r.out.find("observable") != std::string::npos);
  r = run("analyze " + example("scaling.json"));
  CHECK(r.status == 0);
  r = run("analyze --json " + example("reducible.json"));
  REQUIRE(r.status == 0);
  const auto j = nlohmann::ordered_json::parse(r.out);
  CHECK(j["verdict"]["observable"] == false);
  CHECK(j["components"].size() == 2);
}

TEST_CASE("hyperbola report matches the frozen golden file") {
  const Run r = run("analyze --json " + example("hyperbola.json"));
  REQUIRE(r.status == 0);
  const std::string golden = slurp(kSource + "/tests/golden/hyperbola_report.json");
  CHECK(masked(r.out).dump(2) + "\n" == golden);
}

TEST_CASE("report answers for the hyperbola") {
  const auto j = nlohmann::ordered_json::parse(run("analyze --json " + example("hyperbola.json")).out);
  CHECK(j["schema"] == "torusobs.report/1");
  CHECK(j["verdict"]["observable"] == true);
  CHECK(j["invariants"]["hilbert_basis"] == nlohmann::ordered_json::parse("[[1,1]]"));
  CHECK(j["socle"]["full"] == true);
  CHECK(j["quotient"]["geometric_quotient_f"] == nlohmann::ordered_json::parse("[1,1]"));
}

TEST_CASE("input errors exit 2 with a diagnostic on stderr") {
  Run r = run("analyze -", R"({"weights": [[1, 0, -1, 0], [0, 1, 0]]})");
  CHECK(r.status == 2);
  CHECK(r.err.find("row 2") != std::string::npos);
  CHECK(r.out.empty());
  r = run("analyze /nonexistent/file.json");
  CHECK(r.status == 2);
  r = run("quotient --point 1,x " + example("hyperbola.json"));
  CHECK(r.status == 2);
}

TEST_CASE("inline documents are accepted") {
  const Run r = run("hilbert --json " + quote(R"({"weights": [[1, -1]]})"));
  REQUIRE(r.status == 0);
  CHECK(nlohmann::ordered_json::parse(r.out)["invariants"]["hilbert_basis"] == nlohmann::ordered_json::parse("[[1,1]]"));
}

TEST_CASE("referee exit codes") {
  CHECK(run("referee " + example("segre.json")).status == 0);
  const Run corpus = run("referee --json " + example("corpus.json"));
  CHECK(corpus.status == 0);
  const auto summary = nlohmann::ordered_json::parse(corpus.out);
  CHECK(summary["kind"] == "referee-corpus");
  CHECK(summary["clean"] == summary["instances"]);
  const Run bad = run("referee " + example("segre.json") + " --basis " +
                      quote(kSource + "/tests/fixtures/segre_basis_missing.txt"));
  CHECK(bad.status == 1);
  CHECK(bad.out.find("x^(1,0,0,1)") != std::string::npos);
  const Run vacuous = run("referee --degree-bound 0 --json " + example("segre.json"));
  CHECK(vacuous.status == 0);
  CHECK(nlohmann::ordered_json::parse(vacuous.out)["oracle"]["status"] == "clean");
}

TEST_CASE("golden subcommands reproduce the frozen files") {
  using torusobs::mask_version;
  CHECK(mask_version(run("hilbert --golden " + example("segre.json")).out) ==
        slurp(kSource + "/tests/golden/segre_basis.txt"));
  CHECK(mask_version(run("socle --golden " + example("axis.json")).out) ==
        slurp(kSource + "/tests/golden/axis_socle.txt"));
}

TEST_CASE("resource ceilings exit 3") {
  const Run r = run("referee --degree-bound 40 " + quote(R"({"weights": [[1, 1, 1, 1, 1, 1, 1, -1]]})"));
  CHECK(r.status == 3);
  CHECK(r.err.find("resource") != std::string::npos);
}

TEST_CASE("quotient at a point") {
  const Run r = run("quotient --json --no-sampling --point 3,2 " + example("hyperbola.json"));
  REQUIRE(r.status == 0);
  const auto j = nlohmann::ordered_json::parse(r.out);
  CHECK(j.dump().find("\"6\"") != std::string::npos);
}

TEST_CASE("every subcommand renders every example") {
  for (const char* name : {"hyperbola.json", "segre.json", "axis.json", "gl_type.json", "scaling.json"}) {
    for (const char* sub : {"analyze", "hilbert --oracle", "socle", "quotient --trials 10", "referee --degree-bound 4"}) {
      for (const char* mode : {"", " --json"}) {
        const Run r = run(std::string(sub) + mode + " " + example(name));
        CHECK_MESSAGE(r.status == 0, sub << mode << " " << name << ": " << r.err);
        CHECK_FALSE(r.out.empty());
      }
    }
  }
  for (const char* sub : {"analyze", "hilbert", "referee --degree-bound 4"})
    CHECK(run(std::string(sub) + " " + example("reducible.json")).status == 0);
  CHECK(run("analyze " + example("localized.json")).status == 0);
}
