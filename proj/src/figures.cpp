#include "taxisect/figures.hpp"

#include "taxisect/angles.hpp"
#include "taxisect/constructions.hpp"

namespace taxisect {

namespace {

const Style kAux{StrokeWidth::Thin, Dash::Dashed, LabelPlacement::NE};
const Style kThin{StrokeWidth::Thin, Dash::Solid, LabelPlacement::NE};
const Style kBold{StrokeWidth::Bold, Dash::Solid, LabelPlacement::SE};

// Two segments of Euclidean length 4: one axis-aligned (taxicab 4), one along
// the 3-4-5 direction (taxicab 28/5), with the taxicab staircase drawn dashed.
Scene distance_figure() {
  Scene s;
  Point o{0, 0};
  Point h{4, 0};
  Point d{Rational(12, 5), Rational(16, 5)};
  s.add(Segment(o, h), "d_t = " + taxicab_distance(o, h).str(), {StrokeWidth::Normal, Dash::Solid, LabelPlacement::SE});
  s.add(Segment(o, d), "d_t = " + taxicab_distance(o, d).str(), {StrokeWidth::Normal, Dash::Solid, LabelPlacement::NW});
  s.add(Polyline{{o, Point{d.x, 0}, d}}, "", kAux);
  s.add(o);
  s.add(h);
  s.add(d);
  return s;
}

// Moving from Q toward P horizontally must be compensated vertically, which
// traces the slope +-1 edges of the circle about P.
Scene circle_figure() {
  Scene s;
  TaxicabCircle c({0, 0}, 2);
  s.add(c, "", kThin);
  s.add(Point{0, 0}, "P", {StrokeWidth::Normal, Dash::Solid, LabelPlacement::SE});
  s.add(Point{2, 0}, "Q", {StrokeWidth::Normal, Dash::Solid, LabelPlacement::SE});
  s.add(Polyline{{{2, 0}, {Rational(3, 2), 0}, {Rational(3, 2), Rational(1, 2)},
                  {1, Rational(1, 2)}, {1, 1}}},
        "", kAux);
  s.add(Point{1, 1}, "", {StrokeWidth::Normal});
  return s;
}

Scene tradian_figure() {
  Scene s;
  Point o{0, 0};
  s.add(TaxicabCircle(o, 1), "", kThin);
  Point start = param_to_point(ArcParam(0));
  Point end = param_to_point(ArcParam(1));
  s.add(Segment(o, start), "", {StrokeWidth::Normal});
  s.add(Segment(o, end), "", {StrokeWidth::Normal});
  s.add(Polyline{{start, end}}, "1 t-radian", kBold);
  s.add(o, "O", {StrokeWidth::Normal, Dash::Solid, LabelPlacement::SW});
  return s;
}

// Panels for n = 3 and n = 4, side by side.
Scene split_panels(const Point& a, const Point& b, const Point& offset) {
  Scene s;
  s.append(scene_from_trace(nsect_segment(a, b, 3).trace), "n3");
  s.append(translated(scene_from_trace(nsect_segment(a, b, 4).trace), offset), "n4");
  return s;
}

}  // namespace

const std::vector<std::string>& demo_figure_names() {
  static const std::vector<std::string> names = {"distance", "circle", "tradian", "construction",
                                                 "general"};
  return names;
}

Scene demo_figure(std::string_view name) {
  if (name == "distance") return distance_figure();
  if (name == "circle") return circle_figure();
  if (name == "tradian") return tradian_figure();
  if (name == "construction") return split_panels({0, 0}, {1, 1}, {7, 0});
  if (name == "general") return split_panels({0, 0}, {2, 1}, {11, 0});
  std::string valid;
  for (const auto& n : demo_figure_names()) valid += (valid.empty() ? "" : ", ") + n;
  throw DomainError("unknown figure '" + std::string(name) + "' (valid: " + valid + ")");
}

}  // namespace taxisect
