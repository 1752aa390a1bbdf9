#include "taxisect/constructions.hpp"

#include <algorithm>
#include <sstream>

namespace taxisect {

namespace {

// ---------------------------------------------------------------------------
// Step evaluation, shared by the builder and by verify_trace.

class StepFailed : public Error {
 public:
  using Error::Error;
};

template <typename T>
const T& input_as(const std::vector<TraceStep>& steps, std::size_t self, std::size_t slot,
                  const char* what) {
  const TraceStep& step = steps[self];
  if (slot >= step.inputs.size()) {
    throw MalformedTrace("step " + std::to_string(self) + " is missing input " +
                         std::to_string(slot));
  }
  std::size_t ref = step.inputs[slot];
  if (ref >= self) {
    throw MalformedTrace("step " + std::to_string(self) + " references step " +
                         std::to_string(ref) + " which is not earlier");
  }
  const auto* value = std::get_if<T>(&steps[ref].output);
  if (value == nullptr) {
    throw MalformedTrace("step " + std::to_string(self) + " expects a " + what + " at step " +
                         std::to_string(ref));
  }
  return *value;
}

const Point& point_in(const std::vector<TraceStep>& s, std::size_t i, std::size_t k) {
  return input_as<Point>(s, i, k, "point");
}
const Line& line_in(const std::vector<TraceStep>& s, std::size_t i, std::size_t k) {
  return input_as<Line>(s, i, k, "line");
}
const TaxicabCircle& circle_in(const std::vector<TraceStep>& s, std::size_t i, std::size_t k) {
  return input_as<TaxicabCircle>(s, i, k, "circle");
}

// Recomputes step `i` from its inputs. Geometric failures throw StepFailed
// (or a kernel Error); structural problems throw MalformedTrace.
Primitive evaluate(const std::vector<TraceStep>& steps, std::size_t i) {
  const TraceStep& step = steps[i];
  switch (step.kind) {
    case StepKind::PlacePoint:
      if (!std::holds_alternative<Point>(step.output)) {
        throw MalformedTrace("step " + std::to_string(i) + " places a non-point");
      }
      return step.output;

    case StepKind::DrawCircle: {
      const Point& center = point_in(steps, i, 0);
      if (step.radius) return TaxicabCircle(center, *step.radius);
      return TaxicabCircle(center, taxicab_distance(point_in(steps, i, 1), point_in(steps, i, 2)));
    }

    case StepKind::DrawLine:
      return line_through(point_in(steps, i, 0), point_in(steps, i, 1));

    case StepKind::IntersectLineCircle: {
      if (!step.pick) throw MalformedTrace("step " + std::to_string(i) + " has no pick rule");
      const Point& ref = point_in(steps, i, 2);
      auto hits = points_of(intersect_line_circle(line_in(steps, i, 0), circle_in(steps, i, 1)));
      if (hits.empty()) throw StepFailed("line misses the circle");
      auto by_distance = [&](const Point& p, const Point& q) {
        return taxicab_distance(ref, p) < taxicab_distance(ref, q);
      };
      auto chosen = *step.pick == Pick::Nearest
                        ? std::min_element(hits.begin(), hits.end(), by_distance)
                        : std::max_element(hits.begin(), hits.end(), by_distance);
      if (hits.size() == 2 &&
          taxicab_distance(ref, hits[0]) == taxicab_distance(ref, hits[1])) {
        throw StepFailed("both intersections are equidistant from the reference point");
      }
      return *chosen;
    }

    case StepKind::IntersectLines: {
      auto meet = intersect_lines(line_in(steps, i, 0), line_in(steps, i, 1));
      const auto* one = std::get_if<OnePoint>(&meet);
      if (one == nullptr) throw StepFailed("lines are parallel");
      return one->point;
    }

    case StepKind::TakeCircleVertex:
      if (!step.vertex) throw MalformedTrace("step " + std::to_string(i) + " names no vertex");
      return circle_vertex(circle_in(steps, i, 0), *step.vertex);

    case StepKind::MarkResult:
      return point_in(steps, i, 0);
  }
  throw MalformedTrace("unknown step kind");
}

bool lies_on(const Primitive& where, const Point& p) {
  if (const auto* line = std::get_if<Line>(&where)) return line->contains(p);
  if (const auto* circle = std::get_if<TaxicabCircle>(&where)) return point_on_circle(*circle, p);
  return std::get<Point>(where) == p;
}

// ---------------------------------------------------------------------------

class TraceBuilder {
 public:
  std::size_t place(const Point& p, Role role, std::string label = {}) {
    TraceStep s;
    s.kind = StepKind::PlacePoint;
    s.output = p;
    s.role = role;
    s.label = std::move(label);
    return push(std::move(s));
  }

  // Compass set to d_t(from, to).
  std::size_t circle(std::size_t center, std::size_t from, std::size_t to) {
    TraceStep s;
    s.kind = StepKind::DrawCircle;
    s.inputs = {center, from, to};
    return push(std::move(s));
  }

  std::size_t circle(std::size_t center, const Rational& radius) {
    TraceStep s;
    s.kind = StepKind::DrawCircle;
    s.inputs = {center};
    s.radius = radius;
    return push(std::move(s));
  }

  std::size_t line(std::size_t p, std::size_t q, Role role = Role::Auxiliary) {
    TraceStep s;
    s.kind = StepKind::DrawLine;
    s.inputs = {p, q};
    s.role = role;
    return push(std::move(s));
  }

  std::size_t meet(std::size_t line, std::size_t circle, Pick pick, std::size_t ref,
                   std::string label = {}) {
    TraceStep s;
    s.kind = StepKind::IntersectLineCircle;
    s.inputs = {line, circle, ref};
    s.pick = pick;
    s.lies_on = {line, circle};
    s.label = std::move(label);
    return push(std::move(s));
  }

  std::size_t meet(std::size_t m, std::size_t n) {
    TraceStep s;
    s.kind = StepKind::IntersectLines;
    s.inputs = {m, n};
    s.lies_on = {m, n};
    return push(std::move(s));
  }

  std::size_t corner(std::size_t circle, Compass which) {
    TraceStep s;
    s.kind = StepKind::TakeCircleVertex;
    s.inputs = {circle};
    s.vertex = which;
    s.lies_on = {circle};
    return push(std::move(s));
  }

  std::size_t mark(std::size_t point, std::string label) {
    TraceStep s;
    s.kind = StepKind::MarkResult;
    s.inputs = {point};
    s.role = Role::Result;
    s.label = std::move(label);
    std::size_t index = push(std::move(s));
    trace_.results.push_back(index);
    return index;
  }

  const Point& point(std::size_t i) const { return std::get<Point>(trace_.steps[i].output); }
  ConstructionTrace& trace() { return trace_; }

 private:
  std::size_t push(TraceStep step) {
    trace_.steps.push_back(std::move(step));
    std::size_t i = trace_.steps.size() - 1;
    trace_.steps[i].output = evaluate(trace_.steps, i);
    return i;
  }

  ConstructionTrace trace_;
};

// Offset e from a circle centre to the corner used as the "top" of the circle
// about a; the "bottom" of the last chained circle is the opposite corner.
// With e = (0, L) this is the slope-1 construction; other orientations use
// the dihedral image that keeps d_t((n-2)(b-a) + e) = (n-1)L.
Compass top_corner(const Point& a, const Point& b) {
  const Point d = b - a;
  if (d.x.is_zero()) return Compass::East;
  return d.y.sign() < 0 ? Compass::South : Compass::North;
}

Compass opposite(Compass c) {
  switch (c) {
    case Compass::North: return Compass::South;
    case Compass::South: return Compass::North;
    case Compass::East: return Compass::West;
    case Compass::West: return Compass::East;
  }
  return c;
}

struct NsectSteps {
  std::size_t line_ab;
  std::size_t point_c;
};

NsectSteps append_nsect(TraceBuilder& tb, std::size_t ia, std::size_t ib, int n,
                        bool label_p) {
  const Point a = tb.point(ia);
  const Point b = tb.point(ib);
  const Compass top = top_corner(a, b);
  const Compass bottom = opposite(top);

  std::size_t ab = tb.line(ia, ib, Role::Given);
  std::size_t around_b = tb.circle(ib, ia, ib);
  std::size_t around_a = tb.circle(ia, ia, ib);

  if (n == 2) {
    std::size_t low = tb.corner(around_a, bottom);
    std::size_t high = tb.corner(around_b, top);
    std::size_t joined = tb.line(low, high);
    return {ab, tb.meet(joined, ab)};
  }

  std::size_t last = around_a;
  for (int k = 0; k < n - 3; ++k) {
    std::size_t next_center = tb.meet(ab, last, Pick::Farthest, ib);
    last = tb.circle(next_center, ia, ib);
  }
  std::size_t low = tb.corner(last, bottom);
  std::size_t to_b = tb.line(low, ib);
  std::size_t p = tb.meet(to_b, around_b, Pick::Nearest, low, label_p ? "P" : "");
  std::size_t high = tb.corner(around_a, top);
  std::size_t to_top = tb.line(p, high);
  return {ab, tb.meet(to_top, ab)};
}

Point parametric_division(const Point& a, const Point& b, const Rational& k, int n) {
  return a + (k / Rational(n)) * (b - a);
}

}  // namespace

// ---------------------------------------------------------------------------

NsectResult nsect_segment(const Point& a, const Point& b, int n) {
  if (n < 2) throw DomainError("n-section needs n >= 2, got " + std::to_string(n));
  if (a == b) throw DomainError("n-section needs a != b");

  TraceBuilder tb;
  std::size_t ia = tb.place(a, Role::Given, "A");
  std::size_t ib = tb.place(b, Role::Given, "B");
  auto steps = append_nsect(tb, ia, ib, n, true);
  tb.mark(steps.point_c, "C");

  Point c = tb.point(steps.point_c);
  if (c != parametric_division(a, b, 1, n)) {
    throw ConstructionFailure("construction produced " + c.str() + " instead of a + (b - a)/" +
                                  std::to_string(n),
                              std::move(tb.trace()));
  }
  return {c, std::move(tb.trace())};
}

Point last_circle_south_vertex(const Point& a, const Point& b, int n) {
  if (n < 3) throw DomainError("the last chained circle is undefined for n < 3");
  if (a == b) throw DomainError("segment endpoints must differ");
  Point center = a - Rational(n - 3) * (b - a);
  return circle_vertex(TaxicabCircle(center, taxicab_distance(a, b)), Compass::South);
}

SectionResult section_angle(const Angle& angle, int n, const Rational& radius) {
  if (n < 2) throw DomainError("angle sectioning needs n >= 2, got " + std::to_string(n));
  if (radius.sign() <= 0) throw DomainError("sectioning radius must be positive");
  const Rational measure = measure_angle(angle);
  if (measure.is_zero()) throw DomainError("cannot section a degenerate angle");

  const Rational start = direction_to_param(angle.side1).value();
  const Rational ccw = directed_measure(angle.side1, angle.side2);
  const Rational sweep = ccw <= kStraightAngle ? ccw : ccw - kFullTurn;  // signed

  SectionResult out;
  std::vector<Point> on_circle;
  for (int k = 1; k < n; ++k) {
    Point u = param_to_point(ArcParam::wrap(start + Rational(k) * sweep / Rational(n)));
    out.rays.push_back(Ray{angle.vertex, Direction::of(u)});
    on_circle.push_back(angle.vertex + radius * u);
  }

  // Does the swept arc stay on a single edge of the circle?
  Rational lo = min(start, start + sweep);
  Rational hi = max(start, start + sweep);
  if (lo.sign() < 0) {
    lo += kFullTurn;
    hi += kFullTurn;
  }
  Rational edge_start = Rational(2) * Rational((lo / 2).floor());
  if (hi > edge_start + 2) return out;

  TraceBuilder tb;
  std::size_t v = tb.place(angle.vertex, Role::Given, "V");
  std::size_t circle = tb.circle(v, radius);
  auto side_hit = [&](const Direction& side) {
    std::size_t s = tb.place(angle.vertex + side.vec(), Role::Given);
    std::size_t l = tb.line(v, s, Role::Given);
    return tb.meet(l, circle, Pick::Nearest, s);
  };
  std::size_t q1 = side_hit(angle.side1);
  std::size_t q2 = side_hit(angle.side2);

  auto first = append_nsect(tb, q1, q2, n, false);
  std::vector<std::size_t> splits = {first.point_c};
  for (int k = 2; k < n; ++k) {
    std::size_t copy = tb.circle(splits.back(), q1, first.point_c);
    splits.push_back(tb.meet(first.line_ab, copy, Pick::Farthest, q1));
  }
  for (std::size_t k = 0; k < splits.size(); ++k) {
    tb.mark(splits[k], "C" + std::to_string(k + 1));
    if (tb.point(splits[k]) != on_circle[k]) {
      throw ConstructionFailure("chord split point " + tb.point(splits[k]).str() +
                                    " does not match ray point " + on_circle[k].str(),
                                std::move(tb.trace()));
    }
  }
  out.trace = std::move(tb.trace());
  return out;
}

VerificationReport verify_trace(const ConstructionTrace& trace) {
  const auto& steps = trace.steps;
  for (std::size_t r : trace.results) {
    if (r >= steps.size() || steps[r].kind != StepKind::MarkResult) {
      throw MalformedTrace("result reference " + std::to_string(r) + " is not a MarkResult step");
    }
  }

  VerificationReport report;
  auto fail = [&](std::size_t i, std::string message) {
    report.ok = false;
    report.failed_step = i;
    report.message = "step " + std::to_string(i) + " (" + to_string(steps[i].kind) +
                     "): " + std::move(message);
    report.results.clear();
    return report;
  };

  for (std::size_t i = 0; i < steps.size(); ++i) {
    for (std::size_t ref : steps[i].lies_on) {
      if (ref >= i) {
        throw MalformedTrace("step " + std::to_string(i) + " asserts incidence on later step " +
                             std::to_string(ref));
      }
    }

    Primitive expected;
    try {
      expected = evaluate(steps, i);
    } catch (const MalformedTrace&) {
      throw;
    } catch (const Error& e) {
      return fail(i, e.what());
    }
    if (expected != steps[i].output) return fail(i, "recorded output does not match replay");

    if (const auto* p = std::get_if<Point>(&steps[i].output)) {
      for (std::size_t ref : steps[i].lies_on) {
        if (!lies_on(steps[ref].output, *p)) {
          return fail(i, p->str() + " does not lie on step " + std::to_string(ref));
        }
      }
    }
  }

  for (std::size_t r : trace.results) report.results.push_back(std::get<Point>(steps[r].output));
  return report;
}

std::string to_string(StepKind kind) {
  switch (kind) {
    case StepKind::PlacePoint: return "PlacePoint";
    case StepKind::DrawCircle: return "DrawCircle";
    case StepKind::DrawLine: return "DrawLine";
    case StepKind::IntersectLineCircle: return "IntersectLineCircle";
    case StepKind::IntersectLines: return "IntersectLines";
    case StepKind::TakeCircleVertex: return "TakeCircleVertex";
    case StepKind::MarkResult: return "MarkResult";
  }
  return "?";
}

std::string to_string(Compass which) {
  switch (which) {
    case Compass::North: return "N";
    case Compass::South: return "S";
    case Compass::East: return "E";
    case Compass::West: return "W";
  }
  return "?";
}

std::string format_trace(const ConstructionTrace& trace) {
  std::ostringstream os;
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const TraceStep& s = trace.steps[i];
    os << "#" << i << " " << to_string(s.kind);
    if (!s.inputs.empty()) {
      os << " [";
      for (std::size_t k = 0; k < s.inputs.size(); ++k) os << (k ? ", #" : "#") << s.inputs[k];
      os << "]";
    }
    if (s.vertex) os << " " << to_string(*s.vertex);
    if (s.pick) os << (*s.pick == Pick::Nearest ? " nearest" : " farthest");
    if (s.radius) os << " r=" << s.radius->str();
    os << " -> ";
    if (const auto* p = std::get_if<Point>(&s.output)) os << p->str();
    if (const auto* l = std::get_if<Line>(&s.output)) os << l->str();
    if (const auto* c = std::get_if<TaxicabCircle>(&s.output)) {
      os << "circle " << c->center().str() << " r=" << c->radius().str();
    }
    if (!s.label.empty()) os << "  " << s.label;
    os << "\n";
  }
  return os.str();
}

}  // namespace taxisect
