#include "taxisect/scene.hpp"

#include "taxisect/json_io.hpp"

#include <sstream>

namespace taxisect {

namespace {

using nlohmann::json;

struct Bounds {
  std::optional<ViewBox> box;

  void add(const Point& p) {
    if (!box) {
      box = ViewBox{p.x, p.y, p.x, p.y};
      return;
    }
    box->min_x = min(box->min_x, p.x);
    box->min_y = min(box->min_y, p.y);
    box->max_x = max(box->max_x, p.x);
    box->max_y = max(box->max_y, p.y);
  }
};

void add_bounds(Bounds& b, const Drawable& shape) {
  struct {
    Bounds& b;
    void operator()(const Point& p) const { b.add(p); }
    void operator()(const Segment& s) const {
      b.add(s.p());
      b.add(s.q());
    }
    void operator()(const LineSpan& l) const {
      if (l.span) {
        b.add(l.span->first);
        b.add(l.span->second);
      }
    }
    void operator()(const RaySpan& r) const { b.add(r.ray.origin); }
    void operator()(const TaxicabCircle& c) const {
      for (Compass k : {Compass::East, Compass::North, Compass::West, Compass::South}) {
        b.add(circle_vertex(c, k));
      }
    }
    void operator()(const Polyline& p) const {
      for (const Point& q : p.points) b.add(q);
    }
  } visitor{b};
  std::visit(visitor, shape);
}

// Clip origin + t * dir for t in [t_lo, t_hi] (either may be unbounded).
std::optional<std::pair<Point, Point>> clip_param(const Point& origin, const Point& dir,
                                                  std::optional<Rational> t_lo,
                                                  std::optional<Rational> t_hi,
                                                  const ViewBox& box) {
  auto axis = [&](const Rational& o, const Rational& d, const Rational& lo, const Rational& hi) {
    if (d.is_zero()) return lo <= o && o <= hi;
    Rational t0 = (lo - o) / d;
    Rational t1 = (hi - o) / d;
    if (t1 < t0) std::swap(t0, t1);
    t_lo = t_lo ? max(*t_lo, t0) : t0;
    t_hi = t_hi ? min(*t_hi, t1) : t1;
    return true;
  };
  if (!axis(origin.x, dir.x, box.min_x, box.max_x)) return std::nullopt;
  if (!axis(origin.y, dir.y, box.min_y, box.max_y)) return std::nullopt;
  if (!t_lo || !t_hi || *t_hi <= *t_lo) return std::nullopt;
  return std::pair{origin + *t_lo * dir, origin + *t_hi * dir};
}

// Drawing sizes proportional to the larger viewbox extent.
struct Metrics {
  Rational extent;
  Rational stroke(StrokeWidth w) const {
    switch (w) {
      case StrokeWidth::Thin: return extent / 500;
      case StrokeWidth::Normal: return extent / 300;
      case StrokeWidth::Bold: return extent / 150;
    }
    return extent / 300;
  }
  Rational dash() const { return extent / 80; }
  Rational dot(StrokeWidth w) const { return w == StrokeWidth::Bold ? extent / 70 : extent / 110; }
  Rational font() const { return extent / 28; }
};

std::string dec(const Rational& r) { return r.to_decimal(12); }

std::string stroke_attrs(const Style& s, const Metrics& m, const char* color) {
  std::string out = " fill=\"none\" stroke=\"" + std::string(color) + "\" stroke-width=\"" +
                    dec(m.stroke(s.width)) + "\"";
  if (s.dash == Dash::Dashed) out += " stroke-dasharray=\"" + dec(m.dash()) + " " + dec(m.dash()) + "\"";
  return out;
}

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string svg_line(const Point& p, const Point& q, const std::string& attrs) {
  return "<line x1=\"" + dec(p.x) + "\" y1=\"" + dec(p.y) + "\" x2=\"" + dec(q.x) + "\" y2=\"" +
         dec(q.y) + "\"" + attrs + "/>";
}

// Point where a label is anchored.
std::optional<Point> label_anchor(const Drawable& shape) {
  if (const auto* p = std::get_if<Point>(&shape)) return *p;
  if (const auto* s = std::get_if<Segment>(&shape)) return s->q();
  if (const auto* c = std::get_if<TaxicabCircle>(&shape)) return circle_vertex(*c, Compass::North);
  if (const auto* r = std::get_if<RaySpan>(&shape)) return r->ray.at(1);
  if (const auto* l = std::get_if<LineSpan>(&shape); l && l->span) return l->span->second;
  if (const auto* p = std::get_if<Polyline>(&shape); p && !p->points.empty()) return p->points.back();
  return std::nullopt;
}

void emit_geometry(std::ostream& os, const SceneItem& item, const ViewBox& box, const Metrics& m) {
  const Style& s = item.style;
  const char* color = s.width == StrokeWidth::Bold ? "#b03020" : "#000000";
  if (s.dash == Dash::Dashed) color = "#555555";

  struct {
    std::ostream& os;
    const SceneItem& item;
    const ViewBox& box;
    const Metrics& m;
    const char* color;
    void operator()(const Point& p) const {
      os << "    <circle cx=\"" << dec(p.x) << "\" cy=\"" << dec(p.y) << "\" r=\""
         << dec(m.dot(item.style.width)) << "\" fill=\"" << color << "\"/>\n";
    }
    void operator()(const Segment& seg) const {
      os << "    " << svg_line(seg.p(), seg.q(), stroke_attrs(item.style, m, color)) << "\n";
    }
    void operator()(const LineSpan& l) const {
      auto ends = l.span ? l.span : clip(l.line, box);
      if (ends) os << "    " << svg_line(ends->first, ends->second, stroke_attrs(item.style, m, color)) << "\n";
    }
    void operator()(const RaySpan& r) const {
      if (auto ends = clip(r.ray, box)) {
        os << "    " << svg_line(ends->first, ends->second, stroke_attrs(item.style, m, color)) << "\n";
      }
    }
    void operator()(const TaxicabCircle& c) const {
      os << "    <polygon points=\"";
      bool first = true;
      for (Compass k : {Compass::East, Compass::North, Compass::West, Compass::South}) {
        Point v = circle_vertex(c, k);
        os << (first ? "" : " ") << dec(v.x) << "," << dec(v.y);
        first = false;
      }
      os << "\"" << stroke_attrs(item.style, m, color) << "/>\n";
    }
    void operator()(const Polyline& p) const {
      os << "    <polyline points=\"";
      for (std::size_t i = 0; i < p.points.size(); ++i) {
        os << (i ? " " : "") << dec(p.points[i].x) << "," << dec(p.points[i].y);
      }
      os << "\"" << stroke_attrs(item.style, m, color) << "/>\n";
    }
  } visitor{os, item, box, m, color};
  std::visit(visitor, item.shape);
}

void emit_label(std::ostream& os, const SceneItem& item, const Metrics& m) {
  if (item.label.empty()) return;
  auto anchor = label_anchor(item.shape);
  if (!anchor) return;
  Rational gap = m.font() / 3;
  Rational dx = gap;
  Rational dy = -gap;  // SVG y grows downwards
  const char* align = "start";
  switch (item.style.placement) {
    case LabelPlacement::NE: break;
    case LabelPlacement::NW: dx = -gap; align = "end"; break;
    case LabelPlacement::SE: dy = m.font(); break;
    case LabelPlacement::SW: dx = -gap; dy = m.font(); align = "end"; break;
  }
  os << "    <text x=\"" << dec(anchor->x + dx) << "\" y=\"" << dec(-anchor->y + dy)
     << "\" font-family=\"serif\" font-style=\"italic\" font-size=\"" << dec(m.font())
     << "\" text-anchor=\"" << align << "\">" << xml_escape(item.label) << "</text>\n";
}

void emit_block(std::ostream& os, const std::vector<const SceneItem*>& items, const ViewBox& box,
                const Metrics& m) {
  os << "  <g transform=\"scale(1,-1)\">\n";
  for (const SceneItem* item : items) emit_geometry(os, *item, box, m);
  os << "  </g>\n";
  os << "  <g class=\"labels\">\n";
  for (const SceneItem* item : items) emit_label(os, *item, m);
  os << "  </g>\n";
}

std::string to_string(StrokeWidth w) {
  switch (w) {
    case StrokeWidth::Thin: return "thin";
    case StrokeWidth::Normal: return "normal";
    case StrokeWidth::Bold: return "bold";
  }
  return "?";
}

std::string to_string(LabelPlacement p) {
  switch (p) {
    case LabelPlacement::NE: return "NE";
    case LabelPlacement::NW: return "NW";
    case LabelPlacement::SE: return "SE";
    case LabelPlacement::SW: return "SW";
  }
  return "?";
}

json json_of(const Drawable& shape) {
  struct {
    json operator()(const Point& p) const { return {{"kind", "point"}, {"at", json_of(p)}}; }
    json operator()(const Segment& s) const { return taxisect::json_of(s); }
    json operator()(const LineSpan& l) const {
      json j = taxisect::json_of(l.line);
      if (l.span) j["span"] = json::array({json_of(l.span->first), json_of(l.span->second)});
      return j;
    }
    json operator()(const RaySpan& r) const { return taxisect::json_of(r.ray); }
    json operator()(const TaxicabCircle& c) const { return taxisect::json_of(c); }
    json operator()(const Polyline& p) const {
      json pts = json::array();
      for (const Point& q : p.points) pts.push_back(json_of(q));
      return {{"kind", "polyline"}, {"points", pts}};
    }
  } visitor;
  return std::visit(visitor, shape);
}

}  // namespace

void Scene::append(const Scene& other, const std::string& group) {
  for (SceneItem item : other.items) {
    if (!group.empty()) item.group = group;
    items.push_back(std::move(item));
  }
}

ViewBox auto_viewbox(const Scene& scene) {
  Bounds b;
  for (const SceneItem& item : scene.items) add_bounds(b, item.shape);
  if (!b.box) return {-1, -1, 1, 1};
  ViewBox box = *b.box;
  Rational extent = max(box.max_x - box.min_x, box.max_y - box.min_y);
  Rational margin = extent.is_zero() ? Rational(1) : extent / 10;
  return {box.min_x - margin, box.min_y - margin, box.max_x + margin, box.max_y + margin};
}

ViewBox effective_viewbox(const Scene& scene) {
  return scene.viewbox ? *scene.viewbox : auto_viewbox(scene);
}

std::optional<std::pair<Point, Point>> clip(const Line& line, const ViewBox& box) {
  Point origin = line.is_vertical() ? Point{line.c() / line.a(), 0} : Point{0, line.c() / line.b()};
  return clip_param(origin, line.direction().vec(), std::nullopt, std::nullopt, box);
}

std::optional<std::pair<Point, Point>> clip(const Ray& ray, const ViewBox& box) {
  return clip_param(ray.origin, ray.dir.vec(), Rational(0), std::nullopt, box);
}

Scene scene_from_trace(const ConstructionTrace& trace) {
  auto report = verify_trace(trace);
  if (!report.ok) throw Error("cannot render an unverified trace: " + report.message);

  const Style given{StrokeWidth::Normal, Dash::Solid, LabelPlacement::NW};
  const Style aux{StrokeWidth::Thin, Dash::Dashed, LabelPlacement::NE};
  const Style circle{StrokeWidth::Thin, Dash::Solid, LabelPlacement::NE};
  const Style derived{StrokeWidth::Thin, Dash::Solid, LabelPlacement::SE};
  const Style result{StrokeWidth::Bold, Dash::Solid, LabelPlacement::SE};

  Scene scene;
  const auto& steps = trace.steps;
  auto point = [&](std::size_t i) { return std::get<Point>(steps[i].output); };
  for (const TraceStep& s : steps) {
    switch (s.kind) {
      case StepKind::PlacePoint:
        scene.add(std::get<Point>(s.output), s.label, given);
        break;
      case StepKind::DrawCircle:
        scene.add(std::get<TaxicabCircle>(s.output), s.label, circle);
        break;
      case StepKind::DrawLine: {
        Point p = point(s.inputs[0]);
        Point q = point(s.inputs[1]);
        if (s.role == Role::Given) {
          scene.add(Segment(p, q), s.label, given);
        } else {
          scene.add(LineSpan{std::get<Line>(s.output), std::pair{p, q}}, s.label, aux);
        }
        break;
      }
      case StepKind::IntersectLineCircle:
      case StepKind::IntersectLines:
      case StepKind::TakeCircleVertex:
        scene.add(std::get<Point>(s.output), s.label, derived);
        break;
      case StepKind::MarkResult:
        scene.add(std::get<Point>(s.output), s.label, result);
        break;
    }
  }
  return scene;
}

Scene translated(const Scene& scene, const Point& offset) {
  Scene out;
  out.viewbox = scene.viewbox;
  if (out.viewbox) {
    out.viewbox = ViewBox{out.viewbox->min_x + offset.x, out.viewbox->min_y + offset.y,
                          out.viewbox->max_x + offset.x, out.viewbox->max_y + offset.y};
  }
  struct {
    const Point& d;
    Drawable operator()(const Point& p) const { return p + d; }
    Drawable operator()(const Segment& s) const { return Segment(s.p() + d, s.q() + d); }
    Drawable operator()(const LineSpan& l) const {
      Line moved(l.line.a(), l.line.b(), l.line.c() + l.line.a() * d.x + l.line.b() * d.y);
      std::optional<std::pair<Point, Point>> span;
      if (l.span) span = std::pair{l.span->first + d, l.span->second + d};
      return LineSpan{moved, span};
    }
    Drawable operator()(const RaySpan& r) const { return RaySpan{Ray{r.ray.origin + d, r.ray.dir}}; }
    Drawable operator()(const TaxicabCircle& c) const { return TaxicabCircle(c.center() + d, c.radius()); }
    Drawable operator()(const Polyline& p) const {
      Polyline moved;
      for (const Point& q : p.points) moved.points.push_back(q + d);
      return moved;
    }
  } mover{offset};
  for (const SceneItem& item : scene.items) {
    out.items.push_back({std::visit(mover, item.shape), item.label, item.style, item.group});
  }
  return out;
}

std::string emit_svg(const Scene& scene) {
  const ViewBox box = effective_viewbox(scene);
  const Rational width = box.max_x - box.min_x;
  const Rational height = box.max_y - box.min_y;
  const Metrics m{max(width, height)};

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"" << dec(box.min_x)
     << " " << dec(-box.max_y) << " " << dec(width) << " " << dec(height) << "\" width=\""
     << dec(Rational(600) * width / m.extent) << "\" height=\""
     << dec(Rational(600) * height / m.extent) << "\">\n";
  os << "  <rect class=\"frame\" x=\"" << dec(box.min_x) << "\" y=\"" << dec(-box.max_y)
     << "\" width=\"" << dec(width) << "\" height=\"" << dec(height)
     << "\" fill=\"#ffffff\" stroke=\"none\"/>\n";

  std::size_t i = 0;
  while (i < scene.items.size()) {
    const std::string& group = scene.items[i].group;
    std::vector<const SceneItem*> run;
    while (i < scene.items.size() && scene.items[i].group == group) run.push_back(&scene.items[i++]);
    if (group.empty()) {
      emit_block(os, run, box, m);
    } else {
      os << "  <g id=\"" << xml_escape(group) << "\" class=\"panel\">\n";
      emit_block(os, run, box, m);
      os << "  </g>\n";
    }
  }
  os << "</svg>\n";
  return os.str();
}

std::string emit_json(const Scene& scene) {
  json items = json::array();
  for (const SceneItem& item : scene.items) {
    json j = json_of(item.shape);
    j["label"] = item.label;
    j["group"] = item.group;
    j["style"] = {{"width", to_string(item.style.width)},
                  {"dash", item.style.dash == Dash::Dashed ? "dashed" : "solid"},
                  {"label", to_string(item.style.placement)}};
    items.push_back(std::move(j));
  }
  const ViewBox box = effective_viewbox(scene);
  json out = {{"items", items},
              {"viewbox",
               {{"min_x", box.min_x.str()},
                {"min_y", box.min_y.str()},
                {"max_x", box.max_x.str()},
                {"max_y", box.max_y.str()}}}};
  return canonical_dump(out);
}

}  // namespace taxisect
