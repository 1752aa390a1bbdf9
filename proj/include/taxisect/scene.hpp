#pragma once

// Renderable scenes and their SVG / JSON serializations. Geometry stays exact
// up to emit_svg, which is the only place rationals become decimals.

#include "taxisect/constructions.hpp"
#include "taxisect/geometry.hpp"

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace taxisect {

enum class StrokeWidth { Thin, Normal, Bold };
enum class Dash { Solid, Dashed };
enum class LabelPlacement { NE, NW, SE, SW };

struct Style {
  StrokeWidth width = StrokeWidth::Normal;
  Dash dash = Dash::Solid;
  LabelPlacement placement = LabelPlacement::NE;

  friend bool operator==(const Style&, const Style&) = default;
};

// A line drawn between two points on it (construction lines), or clipped to
// the viewbox when no span is given.
struct LineSpan {
  Line line;
  std::optional<std::pair<Point, Point>> span;
  friend bool operator==(const LineSpan&, const LineSpan&) = default;
};

// A ray clipped to the viewbox.
struct RaySpan {
  Ray ray;
  friend bool operator==(const RaySpan&, const RaySpan&) = default;
};

struct Polyline {
  std::vector<Point> points;
  friend bool operator==(const Polyline&, const Polyline&) = default;
};

using Drawable = std::variant<Point, Segment, LineSpan, RaySpan, TaxicabCircle, Polyline>;

struct SceneItem {
  Drawable shape;
  std::string label;
  Style style;
  std::string group;  // items sharing a nonempty group are emitted in one <g>

  friend bool operator==(const SceneItem&, const SceneItem&) = default;
};

struct ViewBox {
  Rational min_x, min_y, max_x, max_y;
  friend bool operator==(const ViewBox&, const ViewBox&) = default;
};

struct Scene {
  std::vector<SceneItem> items;
  std::optional<ViewBox> viewbox;  // auto-computed when absent

  void add(Drawable shape, std::string label = {}, Style style = {}, std::string group = {}) {
    items.push_back({std::move(shape), std::move(label), style, std::move(group)});
  }
  void append(const Scene& other, const std::string& group = {});

  friend bool operator==(const Scene&, const Scene&) = default;
};

// Bounding box of every bounded feature plus a 10% margin (of the larger
// extent) on each side. Unbounded lines and rays contribute only their
// defining points.
ViewBox auto_viewbox(const Scene& scene);
ViewBox effective_viewbox(const Scene& scene);

// Lines and rays clipped exactly to a box; nullopt when they miss it.
std::optional<std::pair<Point, Point>> clip(const Line& line, const ViewBox& box);
std::optional<std::pair<Point, Point>> clip(const Ray& ray, const ViewBox& box);

// One drawable per step. Given lines become segments between their defining
// points, auxiliary lines dashed spans, the marked result is emphasized.
// Throws Error when the trace does not verify.
Scene scene_from_trace(const ConstructionTrace& trace);

// Translates every item by `offset` (exact).
Scene translated(const Scene& scene, const Point& offset);

std::string emit_svg(const Scene& scene);
std::string emit_json(const Scene& scene);

}  // namespace taxisect
