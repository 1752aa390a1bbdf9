// taxisect: run construction scripts, split segments and angles, measure
// t-radian angles and render figures.
//
// Exit status: 0 success, 1 assertion failure, 2 usage / parse / domain error.

#include "taxisect/angles.hpp"
#include "taxisect/constructions.hpp"
#include "taxisect/figures.hpp"
#include "taxisect/json_io.hpp"
#include "taxisect/scene.hpp"
#include "taxisect/script.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <unistd.h>

namespace {

using namespace taxisect;

constexpr int kOk = 0;
constexpr int kAssertionFailed = 1;
constexpr int kUsage = 2;

bool use_color() {
  return std::getenv("TAXISECT_NO_COLOR") == nullptr && isatty(STDERR_FILENO) != 0;
}

std::string red(const std::string& s) { return use_color() ? "\033[31m" + s + "\033[0m" : s; }

int usage_error(const std::string& message) {
  std::cerr << red("error") << ": " << message << "\n";
  return kUsage;
}

// "X,Y" with rational components, e.g. "7/3,-1".
Point parse_point(const std::string& text) {
  auto comma = text.find(',');
  if (comma == std::string::npos || text.find(',', comma + 1) != std::string::npos) {
    throw ParseError("expected X,Y but got '" + text + "'");
  }
  return {Rational::parse(text.substr(0, comma)), Rational::parse(text.substr(comma + 1))};
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << contents;
}

struct RunOptions {
  std::string script;
  std::string svg;
  std::string json;
  bool quiet = false;
};

int cmd_run(const RunOptions& o) {
  std::ifstream in(o.script, std::ios::binary);
  if (!in) return usage_error("cannot read " + o.script);
  std::stringstream buf;
  buf << in.rdbuf();

  script::ExecResult result;
  try {
    result = script::execute(script::parse(buf.str()));
  } catch (const script::ScriptError& e) {
    std::cerr << o.script << ":" << e.where().str() << ": " << red("error") << ": " << e.message() << "\n";
    return kUsage;
  }

  for (const auto& r : result.renders) write_file(r.path, r.svg);
  if (!o.svg.empty()) write_file(o.svg, emit_svg(result.scene));
  if (!o.json.empty()) write_file(o.json, script::emit_json(result.env));
  if (!o.quiet) {
    for (const auto& d : result.dumps) std::cout << d;
  }
  for (const auto& f : result.failures) {
    std::cerr << o.script << ":" << f.where.str() << ": " << red("FAIL") << " assert_eq: expected "
              << f.expected << ", actual " << f.actual << "\n";
  }
  if (!o.quiet) {
    std::cout << o.script << ": " << result.env.order().size() << " bindings, "
              << result.failures.size() << " failed assertion(s)\n";
  }
  return result.failures.empty() ? kOk : kAssertionFailed;
}

struct NsectOptions {
  std::string a;
  std::string b;
  int n = 0;
  std::string svg;
  std::string json;
  bool trace = false;
};

int cmd_nsect(const NsectOptions& o) {
  Point a = parse_point(o.a);
  Point b = parse_point(o.b);
  auto result = nsect_segment(a, b, o.n);
  auto report = verify_trace(result.trace);
  std::cout << "C = " << result.point.str() << "\n";
  if (o.trace) {
    std::cout << format_trace(result.trace);
    std::cout << (report.ok ? "verified: ok\n" : "verified: FAILED " + report.message + "\n");
  }
  if (!o.svg.empty()) write_file(o.svg, emit_svg(scene_from_trace(result.trace)));
  if (!o.json.empty()) {
    nlohmann::json j = {{"a", json_of(a)},
                        {"b", json_of(b)},
                        {"n", o.n},
                        {"C", json_of(result.point)},
                        {"steps", result.trace.steps.size()},
                        {"verified", report.ok}};
    write_file(o.json, canonical_dump(j));
  }
  return report.ok ? kOk : kUsage;
}

struct AngleOptions {
  std::string vertex = "0,0";
  std::string d1;
  std::string d2;
  int n = 2;
  std::string radius = "1";
  std::string svg;
  bool trace = false;
};

Angle parse_angle(const AngleOptions& o) {
  return {parse_point(o.vertex), Direction::of(parse_point(o.d1)), Direction::of(parse_point(o.d2))};
}

int cmd_measure(const AngleOptions& o) {
  std::cout << measure_angle(parse_angle(o)).str() << "\n";
  return kOk;
}

int cmd_section(const AngleOptions& o) {
  Angle angle = parse_angle(o);
  Rational radius = Rational::parse(o.radius);
  auto result = section_angle(angle, o.n, radius);
  std::cout << "measure = " << measure_angle(angle).str() << ", parts = " << o.n
            << ", each = " << (measure_angle(angle) / o.n).str() << "\n";
  for (std::size_t i = 0; i < result.rays.size(); ++i) {
    Point through = angle.vertex + radius * normalize_to_unit_circle(result.rays[i].dir);
    std::cout << "ray " << i + 1 << " through " << through.str() << "\n";
  }
  if (o.trace) {
    if (result.trace) {
      std::cout << format_trace(*result.trace);
      std::cout << (verify_trace(*result.trace).ok ? "verified: ok\n" : "verified: FAILED\n");
    } else {
      std::cout << "no trace: the swept arc spans a circle corner\n";
    }
  }
  if (!o.svg.empty()) {
    Scene scene = result.trace ? scene_from_trace(*result.trace) : Scene{};
    scene.add(TaxicabCircle(angle.vertex, radius), "", {StrokeWidth::Thin});
    scene.add(RaySpan{Ray{angle.vertex, angle.side1}}, "", {StrokeWidth::Normal});
    scene.add(RaySpan{Ray{angle.vertex, angle.side2}}, "", {StrokeWidth::Normal});
    for (const Ray& r : result.rays) scene.add(RaySpan{r}, "", {StrokeWidth::Thin, Dash::Dashed});
    write_file(o.svg, emit_svg(scene));
  }
  return kOk;
}

int cmd_render_demo(const std::string& figure, const std::string& out) {
  write_file(out, emit_svg(demo_figure(figure)));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact taxicab constructions: n-section of segments and angles"};
  app.require_subcommand(1);

  RunOptions run;
  auto* run_cmd = app.add_subcommand("run", "Parse and execute a .taxi construction script");
  run_cmd->add_option("script", run.script, "Script path")->required();
  run_cmd->add_option("--svg", run.svg, "Write the accumulated scene as SVG");
  run_cmd->add_option("--json", run.json, "Write the final environment as JSON");
  run_cmd->add_flag("--quiet", run.quiet, "Suppress dumps and the summary line");

  NsectOptions nsect;
  auto* nsect_cmd = app.add_subcommand("nsect", "Split segment ab into n equal taxicab parts");
  nsect_cmd->add_option("--a", nsect.a, "Endpoint A as X,Y")->required();
  nsect_cmd->add_option("--b", nsect.b, "Endpoint B as X,Y")->required();
  nsect_cmd->add_option("--n", nsect.n, "Number of parts (>= 2)")->required();
  nsect_cmd->add_option("--svg", nsect.svg, "Render the construction as SVG");
  nsect_cmd->add_option("--json", nsect.json, "Write the result as JSON");
  nsect_cmd->add_flag("--trace", nsect.trace, "Print the verified construction steps");

  AngleOptions section;
  auto* section_cmd = app.add_subcommand("section", "Split an angle into n equal t-radian parts");
  section_cmd->add_option("--vertex", section.vertex, "Vertex as X,Y")->capture_default_str();
  section_cmd->add_option("--d1", section.d1, "First side direction as X,Y")->required();
  section_cmd->add_option("--d2", section.d2, "Second side direction as X,Y")->required();
  section_cmd->add_option("--n", section.n, "Number of parts (>= 2)")->required();
  section_cmd->add_option("--radius", section.radius, "Circle radius")->capture_default_str();
  section_cmd->add_option("--svg", section.svg, "Render the sectioning as SVG");
  section_cmd->add_flag("--trace", section.trace, "Print the construction trace when one exists");

  AngleOptions measure;
  auto* measure_cmd = app.add_subcommand("measure", "Measure an angle in t-radians");
  measure_cmd->add_option("--vertex", measure.vertex, "Vertex as X,Y")->capture_default_str();
  measure_cmd->add_option("--d1", measure.d1, "First side direction as X,Y")->required();
  measure_cmd->add_option("--d2", measure.d2, "Second side direction as X,Y")->required();

  std::string figure;
  std::string out;
  auto* demo_cmd = app.add_subcommand("render-demo", "Write one of the built-in figures as SVG");
  demo_cmd->add_option("--figure", figure, "distance|circle|tradian|construction|general")->required();
  demo_cmd->add_option("--out", out, "Output SVG path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*run_cmd) return cmd_run(run);
    if (*nsect_cmd) return cmd_nsect(nsect);
    if (*section_cmd) return cmd_section(section);
    if (*measure_cmd) return cmd_measure(measure);
    if (*demo_cmd) return cmd_render_demo(figure, out);
  } catch (const Error& e) {
    return usage_error(e.what());
  }
  return kUsage;
}
