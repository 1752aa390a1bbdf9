#pragma once

// Exact planar primitives for taxicab geometry. Every type is an immutable
// value over Rational; there is no floating point anywhere in here.

#include "taxisect/errors.hpp"
#include "taxisect/rational.hpp"

#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace taxisect {

struct Point {
  Rational x;
  Rational y;

  friend bool operator==(const Point&, const Point&) = default;
  friend Point operator+(const Point& p, const Point& q) { return {p.x + q.x, p.y + q.y}; }
  friend Point operator-(const Point& p, const Point& q) { return {p.x - q.x, p.y - q.y}; }
  friend Point operator*(const Rational& s, const Point& p) { return {s * p.x, s * p.y}; }

  std::string str() const { return "(" + x.str() + ", " + y.str() + ")"; }
};

// Lexicographic (x, then y).
bool lex_less(const Point& p, const Point& q);

inline std::ostream& operator<<(std::ostream& os, const Point& p) { return os << p.str(); }

// Nonzero direction vector. Positive multiples describe the same direction
// class, but the stored components are kept as given.
class Direction {
 public:
  Direction(Rational dx, Rational dy);  // throws DomainError on (0, 0)
  static Direction of(const Point& v) { return {v.x, v.y}; }

  const Rational& dx() const { return dx_; }
  const Rational& dy() const { return dy_; }
  Point vec() const { return {dx_, dy_}; }

  // |dx| + |dy|
  Rational norm() const { return dx_.abs() + dy_.abs(); }

  friend bool operator==(const Direction&, const Direction&) = default;

 private:
  Rational dx_;
  Rational dy_;
};

// a*x + b*y = c, scaled so the first nonzero of (a, b) is 1.
class Line {
 public:
  Line(Rational a, Rational b, Rational c);  // throws DomainError when a = b = 0

  // y = slope * x + intercept
  static Line from_slope(const Rational& slope, const Rational& intercept);

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const Rational& c() const { return c_; }

  bool contains(const Point& p) const { return a_ * p.x + b_ * p.y == c_; }
  bool is_vertical() const { return b_.is_zero(); }
  // Only meaningful for non-vertical lines.
  Rational slope() const { return -a_ / b_; }
  // A nonzero vector along the line.
  Direction direction() const { return {b_, -a_}; }

  std::string str() const;

  friend bool operator==(const Line&, const Line&) = default;

 private:
  Rational a_;
  Rational b_;
  Rational c_;
};

struct Ray {
  Point origin;
  Direction dir;

  Point at(const Rational& t) const { return origin + t * dir.vec(); }
  friend bool operator==(const Ray&, const Ray&) = default;
};

class Segment {
 public:
  Segment(Point p, Point q);  // throws DomainError when p == q

  const Point& p() const { return p_; }
  const Point& q() const { return q_; }
  bool contains(const Point& pt) const;

  friend bool operator==(const Segment&, const Segment&) = default;

 private:
  Point p_;
  Point q_;
};

enum class Compass { North, South, East, West };

// Locus |x - cx| + |y - cy| = r: a square with edges of slope +-1.
class TaxicabCircle {
 public:
  TaxicabCircle(Point center, Rational radius);  // throws DomainError when radius <= 0

  const Point& center() const { return center_; }
  const Rational& radius() const { return radius_; }

  friend bool operator==(const TaxicabCircle&, const TaxicabCircle&) = default;

 private:
  Point center_;
  Rational radius_;
};

struct Empty {
  friend bool operator==(const Empty&, const Empty&) = default;
};
struct OnePoint {
  Point point;
  friend bool operator==(const OnePoint&, const OnePoint&) = default;
};
struct TwoPoints {
  Point first;
  Point second;
  friend bool operator==(const TwoPoints&, const TwoPoints&) = default;
};
struct OverlapSegment {
  Segment segment;
  friend bool operator==(const OverlapSegment&, const OverlapSegment&) = default;
};

using IntersectionResult = std::variant<Empty, OnePoint, TwoPoints, OverlapSegment>;

// Isolated points of a result (overlaps contribute nothing).
std::vector<Point> points_of(const IntersectionResult& r);
std::string describe(const IntersectionResult& r);

// Thrown by intersect_lines when both operands are the same line.
class CoincidentLines : public Error {
 public:
  CoincidentLines() : Error("lines are coincident") {}
};

Rational taxicab_distance(const Point& p, const Point& q);
Rational euclidean_distance_squared(const Point& p, const Point& q);

Line line_through(const Point& p, const Point& q);

// Empty for parallel lines, OnePoint otherwise; throws CoincidentLines.
IntersectionResult intersect_lines(const Line& m, const Line& n);

// TwoPoints are ordered lexicographically. OverlapSegment when the line
// contains a whole edge.
IntersectionResult intersect_line_circle(const Line& m, const TaxicabCircle& c);

// Points with ray parameter >= 0, ordered by increasing parameter.
IntersectionResult intersect_ray_circle(const Ray& r, const TaxicabCircle& c);

Point circle_vertex(const TaxicabCircle& c, Compass which);
bool point_on_circle(const TaxicabCircle& c, const Point& p);

// Parameter t with p = origin + t * dir; p must lie on the ray's line.
Rational ray_parameter(const Ray& r, const Point& p);

}  // namespace taxisect
