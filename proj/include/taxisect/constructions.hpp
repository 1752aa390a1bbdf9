#pragma once

/**
 * Taxicab compass-and-straightedge constructions recorded as replayable
 * traces.
 *
 * A trace is a list of steps in topological order. Each step names the
 * earlier steps it consumes, the primitive it produced, and the primitives
 * its output point is claimed to lie on. verify_trace() replays the whole
 * list with the core kernel and checks every recorded output and incidence
 * exactly.
 */

#include "taxisect/angles.hpp"
#include "taxisect/errors.hpp"
#include "taxisect/geometry.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace taxisect {

enum class StepKind {
  PlacePoint,
  DrawCircle,
  DrawLine,
  IntersectLineCircle,
  IntersectLines,
  TakeCircleVertex,
  MarkResult,
};

// How IntersectLineCircle chooses among two hits, relative to a reference
// point step (third input).
enum class Pick { Nearest, Farthest };

// Rendering role: given data, auxiliary construction, or the result.
enum class Role { Given, Auxiliary, Result };

using Primitive = std::variant<Point, Line, TaxicabCircle>;

struct TraceStep {
  StepKind kind = StepKind::PlacePoint;
  std::vector<std::size_t> inputs;
  Primitive output;
  // Steps whose line or circle must contain this step's output point.
  std::vector<std::size_t> lies_on;

  std::optional<Rational> radius;  // DrawCircle with a fixed compass setting
  std::optional<Compass> vertex;   // TakeCircleVertex
  std::optional<Pick> pick;        // IntersectLineCircle

  Role role = Role::Auxiliary;
  std::string label;
};

struct ConstructionTrace {
  std::vector<TraceStep> steps;
  std::vector<std::size_t> results;  // MarkResult steps
};

struct VerificationReport {
  bool ok = true;
  std::optional<std::size_t> failed_step;
  std::string message;
  std::vector<Point> results;
};

// Forward or ill-typed step references. Distinct from an assertion failure,
// which is reported through VerificationReport.
class MalformedTrace : public Error {
 public:
  using Error::Error;
};

// The construction disagreed with the parametric division. Carries the trace
// for diagnosis; this indicates a bug in the corner rule.
class ConstructionFailure : public Error {
 public:
  ConstructionFailure(const std::string& what, ConstructionTrace trace)
      : Error(what), trace_(std::move(trace)) {}
  const ConstructionTrace& trace() const { return trace_; }

 private:
  ConstructionTrace trace_;
};

struct NsectResult {
  Point point;
  ConstructionTrace trace;
};

// Point C on ab with d_t(a, C) = d_t(a, b) / n, built with taxicab circles and
// lines only. n == 2 uses the bisection shortcut; n >= 3 chains n - 3 circles
// past a.
NsectResult nsect_segment(const Point& a, const Point& b, int n);

// South vertex of the last chained circle: centre a - (n - 3)(b - a),
// radius d_t(a, b). Requires n >= 3.
Point last_circle_south_vertex(const Point& a, const Point& b, int n);

struct SectionResult {
  std::vector<Ray> rays;  // n - 1 interior rays in sweep order from side1
  std::optional<ConstructionTrace> trace;
};

// Splits the angle into n equal t-radian parts. A trace is produced when the
// swept arc of the circle of `radius` about the vertex stays on one edge.
SectionResult section_angle(const Angle& angle, int n, const Rational& radius = Rational(1));

VerificationReport verify_trace(const ConstructionTrace& trace);

std::string to_string(StepKind kind);
std::string to_string(Compass which);
std::string format_trace(const ConstructionTrace& trace);

}  // namespace taxisect
