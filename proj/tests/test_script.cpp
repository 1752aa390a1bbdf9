#include "taxisect/script.hpp"

#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace taxisect;
using namespace taxisect::script;

namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

std::vector<std::filesystem::path> corpus() {
  std::vector<std::filesystem::path> out;
  for (const auto& e : std::filesystem::directory_iterator(TAXISECT_CORPUS_DIR)) {
    if (e.path().extension() == ".taxi") out.push_back(e.path());
  }
  std::sort(out.begin(), out.end());
  return out;
}

Location syntax_error_at(std::string_view src) {
  try {
    parse(src);
  } catch (const SyntaxError& e) {
    return e.where();
  }
  FAIL("expected a syntax error");
  return {};
}

RuntimeError runtime_error_of(std::string_view src) {
  try {
    execute(parse(src));
  } catch (const RuntimeError& e) {
    return e;
  }
  FAIL("expected a runtime error");
  return RuntimeError({}, "");
}

}  // namespace

TEST_CASE("parse examples") {
  Script one = parse("A = point(0, 0)");
  REQUIRE(one.statements.size() == 1);
  const auto& b = std::get<Binding>(one.statements[0].node);
  CHECK(b.name == "A");
  const auto& call = std::get<Call>(b.value.node);
  CHECK(call.name == "point");
  CHECK(call.args.size() == 2);

  Script two = parse("C = nsect(A, B, 3)");
  const auto& c = std::get<Call>(std::get<Binding>(two.statements[0].node).value.node);
  CHECK(c.name == "nsect");
  REQUIRE(c.args.size() == 3);
  CHECK(std::get<Ident>(c.args[0].node).name == "A");
  CHECK(std::get<RationalLit>(c.args[2].node).text == "3");

  Script div = parse("x = 1/0");
  CHECK(std::get<RationalLit>(std::get<Binding>(div.statements[0].node).value.node).text == "1/0");

  Script mixed = parse("# comment\r\n\r\nassert_eq tdist((0, 0), (2, 2)) 4  # trailing\r\nrender \"out.svg\"\ndump\n");
  REQUIRE(mixed.statements.size() == 3);
  CHECK(std::holds_alternative<AssertEq>(mixed.statements[0].node));
  CHECK(std::get<Render>(mixed.statements[1].node).path == "out.svg");
  CHECK(mixed.statements[2].where.line == 5);
}

TEST_CASE("syntax errors carry precise locations") {
  auto at = syntax_error_at("A = point(0, 0)\nB = frobnicate(1)");
  CHECK(at.line == 2);
  CHECK(at.column == 5);

  at = syntax_error_at("C = nsect(A, B)");
  CHECK(at.line == 1);
  CHECK(at.column == 5);

  at = syntax_error_at("A = point(0, 0");
  CHECK(at.line == 1);
  CHECK(at.column == 15);

  at = syntax_error_at("x = (1, )");
  CHECK(at.column == 9);

  at = syntax_error_at("x = 1 2");
  CHECK(at.column == 7);

  at = syntax_error_at("  x = $");
  CHECK(at.column == 7);

  at = syntax_error_at("render \"out.svg");
  CHECK(at.column == 8);

  at = syntax_error_at("x = 1.5/2");
  CHECK(at.line == 1);
}

TEST_CASE("execute examples") {
  auto ok = execute(parse("A = point(0,0)\nB = point(3,3)\nC = nsect(A,B,3)\nassert_eq tdist(A,C) 2"));
  CHECK(ok.failures.empty());
  CHECK(std::get<Point>(*ok.env.find("C")) == Point{1, 1});

  auto angle = execute(parse("assert_eq measure((0,0),(1,0),(1,1)) 1"));
  CHECK(angle.failures.empty());

  auto bad = execute(parse("assert_eq tdist((0,0),(2,2)) 5\nassert_eq 1 1"));
  REQUIRE(bad.failures.size() == 1);
  CHECK(bad.failures[0].expected == "5");
  CHECK(bad.failures[0].actual == "4");
  CHECK(bad.failures[0].where.line == 1);
  CHECK(bad.failures[0].str() == "1:1: assert_eq failed: expected 5, actual 4");
}

TEST_CASE("runtime errors halt with a location inside the statement") {
  auto e = runtime_error_of("x = 1/0");
  CHECK(e.where().line == 1);
  CHECK(e.where().column == 5);

  e = runtime_error_of("A = point(0, 0)\nB = nsect(A, A, 3)");
  CHECK(e.where().line == 2);
  CHECK(e.message().find("a != b") != std::string::npos);

  e = runtime_error_of("A = point(0, 0)\nd = tdist(A, Z)");
  CHECK(e.where().line == 2);
  CHECK(e.where().column == 14);

  e = runtime_error_of("A = point(0, 0)\nA = point(1, 1)");
  CHECK(e.where().line == 2);

  e = runtime_error_of("c = circle((0, 0), 1)\nd = tdist(c, (1, 1))");
  CHECK(e.where().line == 2);
  CHECK(e.where().column == 11);

  e = runtime_error_of("c = circle((0,0), 2)\np = intersect(line_through((0,0),(1,0)), c)");
  CHECK(e.message().find("pass an index") != std::string::npos);

  e = runtime_error_of("n = nsect((0,0), (1,1), 1/2)");
  CHECK(e.where().column == 25);

  e = runtime_error_of("v = vertex(circle((0,0),1), \"Q\")");
  CHECK(e.where().column == 29);

  e = runtime_error_of("assert_eq (1, 1) circle((0,0), 1)");
  CHECK(e.where().line == 1);

  e = runtime_error_of("m = measure((0,0), (0,0), (1,0))");
  CHECK(e.message().find("zero direction") != std::string::npos);
}

TEST_CASE("decimal literals are exact") {
  auto r = execute(parse("a = 0.25\nassert_eq a 1/4\nb = -0.1\nassert_eq b -1/10"));
  CHECK(r.failures.empty());
}

TEST_CASE("scene accumulation and dumps") {
  auto r = execute(parse("A = point(0,0)\nB = point(2,1)\nC = nsect(A,B,4)\nl = line_through(A,B)\ndump\nrender \"x.svg\""));
  std::vector<std::string> labels;
  for (const auto& item : r.scene.items) {
    if (!item.label.empty()) labels.push_back(item.label);
  }
  CHECK(labels == std::vector<std::string>{"A", "B", "C", "l"});
  REQUIRE(r.dumps.size() == 1);
  CHECK(r.dumps[0].find("\"C\": [\n    \"1/2\",\n    \"1/4\"\n  ]") != std::string::npos);
  REQUIRE(r.renders.size() == 1);
  CHECK(r.renders[0].path == "x.svg");
  CHECK(r.renders[0].svg == emit_svg(r.scene));
}

TEST_CASE("env json") {
  auto r = execute(parse("m = measure((0,0), (1,0), (3,4))\nC = nsect((0,0), (2,1), 4)\nd = dir(1, -1)"));
  std::string json = emit_json(r.env);
  auto parsed = nlohmann::json::parse(json);
  CHECK(parsed["m"] == "8/7");
  CHECK(parsed["C"] == nlohmann::json::array({"1/2", "1/4"}));
  CHECK(parsed["d"]["dy"] == "-1");
  CHECK(json.find("\"C\"") < json.find("\"d\""));
}

TEST_CASE("every corpus script passes, reprints and runs deterministically") {
  auto files = corpus();
  CHECK(files.size() >= 10);
  for (const auto& path : files) {
    CAPTURE(path.string());
    std::string src = slurp(path);
    Script script = parse(src);
    CHECK(parse(pretty_print(script)) == script);
    CHECK(pretty_print(parse(pretty_print(script))) == pretty_print(script));

    auto first = execute(script);
    auto second = execute(script);
    CHECK(first.failures.empty());
    for (const auto& f : first.failures) MESSAGE(f.str());
    CHECK(first.env == second.env);
    CHECK(first.scene == second.scene);
    CHECK(emit_svg(first.scene) == emit_svg(second.scene));
    CHECK(emit_json(first.env) == emit_json(second.env));
  }
}
