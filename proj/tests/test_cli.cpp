#include <doctest.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Runs the CLI with the given arguments and standard input.
Run run(const std::string& args, const std::string& input = "") {
  static int counter = 0;
  const fs::path dir = fs::temp_directory_path() / ("cylrsk_cli_test_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  const std::string tag = std::to_string(counter++);
  const fs::path in = dir / ("in" + tag), out = dir / ("out" + tag), err = dir / ("err" + tag);
  std::ofstream(in) << input;
  const std::string cmd = std::string(CYLRSK_CLI) + " " + args + " < " + in.string() + " > " + out.string() +
                          " 2> " + err.string();
  const int status = std::system(cmd.c_str());
  Run r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out);
  r.err = slurp(err);
  return r;
}

std::string data(const std::string& name) { return std::string(CYLRSK_DATA) + "/" + name; }

std::string strip_comments(const std::string& text) {
  std::istringstream in(text);
  std::string line, out;
  while (std::getline(in, line)) {
    if (!line.empty() && line[0] == '#') continue;
    out += line + "\n";
  }
  return out;
}

}  // namespace

TEST_CASE("grow then ungrow reproduces the filling") {
  const Run g = run("grow --d 3 --boundary-only " + data("square7.fill"));
  REQUIRE(g.code == 0);
  const Run u = run("ungrow --d 3 -", g.out);
  REQUIRE(u.code == 0);
  CHECK(u.out == strip_comments(slurp(data("square7.fill"))));
}

TEST_CASE("grow dump renders and checks") {
  const Run g = run("grow --d 3 " + data("square7.fill"));
  REQUIRE(g.code == 0);
  CHECK(g.out.rfind("drsk 3 7 7", 0) == 0);
  CHECK(g.out.find("# [9,9,5]") != std::string::npos);
  const Run r = run("render -", g.out);
  CHECK(r.code == 0);
  CHECK(r.out.find("995") != std::string::npos);
  const Run c = run("check --json -", g.out);
  REQUIRE(c.code == 0);
  const auto j = nlohmann::json::parse(c.out);
  CHECK(j["kind"] == "dump");
  CHECK(j["mcw"] == 7);
}

TEST_CASE("cylindric RS round trip in text and JSON") {
  const Run f = run("rs --d 3 --L 3 -", "3 1 4 2\n");
  REQUIRE(f.code == 0);
  CHECK(f.out.find("# Q") != std::string::npos);
  CHECK(run("rs --d 3 --L 3 --inverse -", f.out).out == "3 1 4 2\n");
  const Run fj = run("rs --d 3 --L 3 --json -", "[3,1,4,2]");
  REQUIRE(fj.code == 0);
  CHECK(run("rs --d 3 --L 3 --inverse --json -", fj.out).out == "[3,1,4,2]\n");
}

TEST_CASE("refusals exit 2 with a witness") {
  const Run r = run("rs --d 3 --L 4 -", "3 2 1 4\n");
  CHECK(r.code == 2);
  CHECK(r.err.find("witness: (1,3) (2,2) (3,1) (4,4)") != std::string::npos);
  const Run c = run("cylrsk --d 3 --L 6 " + data("square7.fill"));
  CHECK(c.code == 2);
  CHECK(c.err.find("witness:") != std::string::npos);
}

TEST_CASE("malformed input exits 3") {
  CHECK(run("rs --d 3 --L 3 -", "x y\n").code == 3);
  CHECK(run("grow -", "[2,1]\n1 2\n").code == 3);
  CHECK(run("check -", "").code == 3);
  CHECK(run("ungrow -", "{\"type\": 1}").code == 3);
}

TEST_CASE("count agrees across routes") {
  const Run r = run("count --d 3 --L 3 --n-max 6 --csv");
  REQUIRE(r.code == 0);
  CHECK(r.out.find("4,22,22,22,yes") != std::string::npos);
  CHECK(r.out.find("6,342,342,342,yes") != std::string::npos);
  const Run j = run("count --d 2 --L 2 --n-max 5 --routes brute,pairs --json");
  REQUIRE(j.code == 0);
  const auto parsed = nlohmann::json::parse(j.out);
  CHECK(parsed["rows"][4]["pairs"] == 16);
  CHECK(run("count --d 2 --L 2 --routes fast").code == 3);
}

TEST_CASE("conjugate, asym and skew-retype") {
  CHECK(run("conjugate [5,4,2] --d 3 --L 4").out == "[4,3,2,2]\n");
  CHECK(run("conjugate - --d 3 --L 4 --json", "[5,4,2]").out == "[4,3,2,2]\n");
  CHECK(run("conjugate [5,4] --d 3 --L 4").code == 2);
  CHECK(run("conjugate [5,4 --d 3 --L 4").code == 3);
  const auto a = nlohmann::json::parse(run("asym --d 2 --L 2 --json").out);
  CHECK(a["rate"].get<double>() == doctest::Approx(2.0));
  CHECK(a["constant"].get<double>() == doctest::Approx(0.5));
  const Run s = run("skew-retype --to -+ -", "+-\n[0]\n[1]\n[0]\n");
  REQUIRE(s.code == 0);
  CHECK(s.out == "-+\n[0]\n[-1]\n[0]\n");
  CHECK(run("skew-retype --to ++ -", "+-\n[0]\n[1]\n[0]\n").code == 2);
}

TEST_CASE("rsk round trip on the skew-shaped filling") {
  const Run t = run("rsk " + data("shaped.fill"));
  REQUIRE(t.code == 0);
  const Run f = run("rsk --inverse -", t.out);
  REQUIRE(f.code == 0);
  CHECK(f.out == strip_comments(slurp(data("shaped.fill"))));
  const Run c = run("check --d 3 --json " + data("shaped.fill"));
  const auto j = nlohmann::json::parse(c.out);
  CHECK(j["avoids_pattern"] == true);
  CHECK(j["ne_chain"] == 21);
}
