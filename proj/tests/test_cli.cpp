// Drives the built taxisect executable and checks output and exit codes.

#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace fs = std::filesystem;

namespace {

struct Outcome {
  int status = -1;
  std::string out;
};

Outcome cli(const std::string& args) {
  std::string cmd = std::string("TAXISECT_NO_COLOR=1 \"") + TAXISECT_CLI + "\" " + args + " 2>/dev/null";
  Outcome o;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) o.out.append(buf.data(), n);
  int raw = pclose(pipe);
  o.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return o;
}

std::string stderr_of(const std::string& args) {
  std::string cmd = std::string("TAXISECT_NO_COLOR=1 \"") + TAXISECT_CLI + "\" " + args + " 2>&1 >/dev/null";
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  std::array<char, 4096> buf{};
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  pclose(pipe);
  return out;
}

fs::path scratch(const std::string& name) {
  fs::path dir = fs::temp_directory_path() / "taxisect_cli_tests";
  fs::create_directories(dir);
  return dir / name;
}

fs::path write_script(const std::string& name, const std::string& body) {
  fs::path p = scratch(name);
  std::ofstream(p) << body;
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string corpus(const std::string& name) { return (fs::path(TAXISECT_CORPUS_DIR) / name).string(); }

}  // namespace

TEST_CASE("run") {
  CHECK(cli("run " + corpus("construction_n3.taxi")).status == 0);

  auto failing = write_script("fail.taxi", "assert_eq tdist((0,0),(2,2)) 5\n");
  CHECK(cli("run " + failing.string()).status == 1);
  std::string err = stderr_of("run " + failing.string());
  CHECK(err.find("1:1: FAIL assert_eq: expected 5, actual 4") != std::string::npos);
  CHECK(std::count(err.begin(), err.end(), '\n') == 1);

  CHECK(cli("run " + scratch("missing.taxi").string()).status == 2);

  auto syntax = write_script("syntax.taxi", "A = point(0, 0\n");
  CHECK(cli("run " + syntax.string()).status == 2);
  CHECK(stderr_of("run " + syntax.string()).find(":1:15: error:") != std::string::npos);

  auto runtime = write_script("runtime.taxi", "x = 1/0\n");
  CHECK(cli("run " + runtime.string()).status == 2);
}

TEST_CASE("run writes svg and json outputs") {
  fs::path svg = scratch("n3.svg");
  fs::path json = scratch("n3.json");
  auto o = cli("run --quiet --svg " + svg.string() + " --json " + json.string() + " " + corpus("general_n4.taxi"));
  CHECK(o.status == 0);
  CHECK(o.out.empty());
  CHECK(slurp(svg).find("<svg") != std::string::npos);
  CHECK(slurp(json).find("\"1/4\"") != std::string::npos);

  auto loud = cli("run " + corpus("general_n4.taxi"));
  CHECK(loud.out.find("\"C\": [") != std::string::npos);  // dump
}

TEST_CASE("nsect") {
  auto three = cli("nsect --a 0,0 --b 3,3 --n 3");
  CHECK(three.status == 0);
  CHECK(three.out == "C = (1, 1)\n");

  auto four = cli("nsect --a 0,0 --b 2,1 --n 4");
  CHECK(four.status == 0);
  CHECK(four.out == "C = (1/2, 1/4)\n");

  CHECK(cli("nsect --a 0,0 --b 0,0 --n 3").status == 2);
  CHECK(cli("nsect --a 0,0 --b 1,1 --n 1").status == 2);
  CHECK(cli("nsect --a 0,0 --b 1 --n 3").status == 2);
  CHECK(cli("nsect --a 0,0 --b 1,x --n 3").status == 2);

  auto traced = cli("nsect --a 0,0 --b 7/3,-1 --n 5 --trace");
  CHECK(traced.status == 0);
  CHECK(traced.out.find("verified: ok") != std::string::npos);
  CHECK(traced.out.find("MarkResult") != std::string::npos);

  fs::path svg = scratch("nsect.svg");
  CHECK(cli("nsect --a 0,0 --b 3,3 --n 3 --svg " + svg.string()).status == 0);
  CHECK(slurp(svg).find("<polygon") != std::string::npos);
}

TEST_CASE("measure") {
  auto one = cli("measure --vertex 0,0 --d1 1,0 --d2 1,1");
  CHECK(one.status == 0);
  CHECK(one.out == "1\n");
  CHECK(cli("measure --d1 1,0 --d2 -1,0").out == "4\n");
  CHECK(cli("measure --d1 1,0 --d2 3,4").out == "8/7\n");
  CHECK(cli("measure --d1 0,0 --d2 3,4").status == 2);
  CHECK(cli("measure --d1 1,0").status == 2);
}

TEST_CASE("section") {
  auto half = cli("section --d1 1,0 --d2 1,1 --n 2 --trace");
  CHECK(half.status == 0);
  CHECK(half.out.find("ray 1 through (3/4, 1/4)") != std::string::npos);
  CHECK(half.out.find("verified: ok") != std::string::npos);
  CHECK(cli("section --d1 1,0 --d2 2,0 --n 2").status == 2);
}

TEST_CASE("render-demo") {
  for (const char* name : {"distance", "circle", "tradian", "construction", "general"}) {
    fs::path out = scratch(std::string(name) + ".svg");
    CHECK(cli(std::string("render-demo --figure ") + name + " --out " + out.string()).status == 0);
    CHECK(slurp(out).find("</svg>") != std::string::npos);
  }
  std::string fig = slurp(scratch("construction.svg"));
  CHECK(fig.find("id=\"n4\"") != std::string::npos);
  CHECK(cli("render-demo --figure bogus --out " + scratch("bogus.svg").string()).status == 2);
  CHECK(stderr_of("render-demo --figure bogus --out x.svg").find("construction") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
  CHECK(cli("").status == 2);
  CHECK(cli("frobnicate").status == 2);
  CHECK(cli("nsect --a 0,0").status == 2);
}
