#include "taxisect/geometry.hpp"

#include "taxisect/errors.hpp"

#include <algorithm>
#include <array>

namespace taxisect {

bool lex_less(const Point& p, const Point& q) {
  if (p.x != q.x) return p.x < q.x;
  return p.y < q.y;
}

Direction::Direction(Rational dx, Rational dy) : dx_(std::move(dx)), dy_(std::move(dy)) {
  if (dx_.is_zero() && dy_.is_zero()) throw DomainError("direction must be nonzero");
}

Line::Line(Rational a, Rational b, Rational c) {
  if (a.is_zero() && b.is_zero()) throw DomainError("line needs (a, b) != (0, 0)");
  const Rational scale = a.is_zero() ? b : a;
  a_ = a / scale;
  b_ = b / scale;
  c_ = c / scale;
}

Line Line::from_slope(const Rational& slope, const Rational& intercept) {
  // y = m x + k  <=>  -m x + y = k
  return {-slope, 1, intercept};
}

std::string Line::str() const {
  if (is_vertical()) return "x = " + (c_ / a_).str();
  Rational m = slope();
  Rational k = c_ / b_;
  std::string out = "y = ";
  if (m.is_zero()) return out + k.str();
  out += m == 1 ? "x" : m == -1 ? "-x" : m.str() + "x";
  if (k.sign() > 0) out += " + " + k.str();
  if (k.sign() < 0) out += " - " + k.abs().str();
  return out;
}

Segment::Segment(Point p, Point q) : p_(std::move(p)), q_(std::move(q)) {
  if (p_ == q_) throw DomainError("segment endpoints must differ");
}

bool Segment::contains(const Point& pt) const {
  if (!line_through(p_, q_).contains(pt)) return false;
  return min(p_.x, q_.x) <= pt.x && pt.x <= max(p_.x, q_.x) &&
         min(p_.y, q_.y) <= pt.y && pt.y <= max(p_.y, q_.y);
}

TaxicabCircle::TaxicabCircle(Point center, Rational radius)
    : center_(std::move(center)), radius_(std::move(radius)) {
  if (radius_.sign() <= 0) throw DomainError("circle radius must be positive");
}

std::vector<Point> points_of(const IntersectionResult& r) {
  if (const auto* one = std::get_if<OnePoint>(&r)) return {one->point};
  if (const auto* two = std::get_if<TwoPoints>(&r)) return {two->first, two->second};
  return {};
}

std::string describe(const IntersectionResult& r) {
  struct {
    std::string operator()(const Empty&) const { return "empty"; }
    std::string operator()(const OnePoint& o) const { return "point " + o.point.str(); }
    std::string operator()(const TwoPoints& t) const {
      return "points " + t.first.str() + ", " + t.second.str();
    }
    std::string operator()(const OverlapSegment& s) const {
      return "overlap " + s.segment.p().str() + " - " + s.segment.q().str();
    }
  } visitor;
  return std::visit(visitor, r);
}

Rational taxicab_distance(const Point& p, const Point& q) {
  return (q.x - p.x).abs() + (q.y - p.y).abs();
}

Rational euclidean_distance_squared(const Point& p, const Point& q) {
  Rational dx = q.x - p.x;
  Rational dy = q.y - p.y;
  return dx * dx + dy * dy;
}

Line line_through(const Point& p, const Point& q) {
  if (p == q) throw DomainError("line_through needs two distinct points");
  // (y_q - y_p) x - (x_q - x_p) y = (y_q - y_p) x_p - (x_q - x_p) y_p
  Rational a = q.y - p.y;
  Rational b = p.x - q.x;
  return {a, b, a * p.x + b * p.y};
}

IntersectionResult intersect_lines(const Line& m, const Line& n) {
  Rational det = m.a() * n.b() - m.b() * n.a();
  if (det.is_zero()) {
    // Canonical scaling makes parallel lines share (a, b).
    if (m.c() == n.c()) throw CoincidentLines();
    return Empty{};
  }
  Rational x = (m.c() * n.b() - m.b() * n.c()) / det;
  Rational y = (m.a() * n.c() - m.c() * n.a()) / det;
  return OnePoint{{x, y}};
}

Point circle_vertex(const TaxicabCircle& c, Compass which) {
  const Point& o = c.center();
  const Rational& r = c.radius();
  switch (which) {
    case Compass::North: return {o.x, o.y + r};
    case Compass::South: return {o.x, o.y - r};
    case Compass::East: return {o.x + r, o.y};
    case Compass::West: return {o.x - r, o.y};
  }
  return o;
}

bool point_on_circle(const TaxicabCircle& c, const Point& p) {
  return taxicab_distance(c.center(), p) == c.radius();
}

IntersectionResult intersect_line_circle(const Line& m, const TaxicabCircle& c) {
  const std::array<Point, 4> corners = {
      circle_vertex(c, Compass::East), circle_vertex(c, Compass::North),
      circle_vertex(c, Compass::West), circle_vertex(c, Compass::South)};

  std::vector<Point> hits;
  for (std::size_t i = 0; i < corners.size(); ++i) {
    Segment edge(corners[i], corners[(i + 1) % corners.size()]);
    Line support = line_through(edge.p(), edge.q());
    if (support == m) return OverlapSegment{edge};
    auto meet = intersect_lines(m, support);
    if (const auto* one = std::get_if<OnePoint>(&meet); one && edge.contains(one->point)) {
      if (std::find(hits.begin(), hits.end(), one->point) == hits.end()) hits.push_back(one->point);
    }
  }

  std::sort(hits.begin(), hits.end(), lex_less);
  switch (hits.size()) {
    case 0: return Empty{};
    case 1: return OnePoint{hits[0]};
    case 2: return TwoPoints{hits[0], hits[1]};
    default: throw Error("line meets a convex diamond in more than two points");
  }
}

Rational ray_parameter(const Ray& r, const Point& p) {
  if (!r.dir.dx().is_zero()) return (p.x - r.origin.x) / r.dir.dx();
  return (p.y - r.origin.y) / r.dir.dy();
}

IntersectionResult intersect_ray_circle(const Ray& r, const TaxicabCircle& c) {
  auto full = intersect_line_circle(line_through(r.origin, r.at(1)), c);

  if (const auto* overlap = std::get_if<OverlapSegment>(&full)) {
    Rational t0 = ray_parameter(r, overlap->segment.p());
    Rational t1 = ray_parameter(r, overlap->segment.q());
    if (t1 < t0) std::swap(t0, t1);
    if (t1.sign() < 0) return Empty{};
    Rational lo = max(t0, Rational(0));
    if (lo == t1) return OnePoint{r.at(t1)};
    return OverlapSegment{Segment(r.at(lo), r.at(t1))};
  }

  std::vector<std::pair<Rational, Point>> kept;
  for (const Point& p : points_of(full)) {
    Rational t = ray_parameter(r, p);
    if (t.sign() >= 0) kept.emplace_back(t, p);
  }
  std::sort(kept.begin(), kept.end(),
            [](const auto& lhs, const auto& rhs) { return lhs.first < rhs.first; });
  switch (kept.size()) {
    case 0: return Empty{};
    case 1: return OnePoint{kept[0].second};
    default: return TwoPoints{kept[0].second, kept[1].second};
  }
}

}  // namespace taxisect
