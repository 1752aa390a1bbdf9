#pragma once

// Seeded generators and independent oracles shared by the unit and
// acceptance suites. Nothing in here calls the code path it is used to check.

#include "taxisect/geometry.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <random>
#include <vector>

namespace taxisect::testing {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  // Numerator in [-bound, bound], denominator in [1, bound].
  Rational rational(int bound = 1000) {
    return Rational(Rational::Integer(integer(-bound, bound)), Rational::Integer(integer(1, bound)));
  }
  Rational positive(int bound = 1000) {
    return Rational(Rational::Integer(integer(1, bound)), Rational::Integer(integer(1, bound)));
  }
  Point point(int bound = 1000) { return {rational(bound), rational(bound)}; }

  Point nonzero_vector(int bound = 1000) {
    while (true) {
      Point v = point(bound);
      if (!v.x.is_zero() || !v.y.is_zero()) return v;
    }
  }

  // Offsets covering every open octant plus the axis-aligned and diagonal
  // directions, cycling with `k`.
  Point octant_vector(int k, int bound = 1000) {
    Rational u = positive(bound);
    Rational v = positive(bound);
    Rational big = max(u, v);
    Rational small = min(u, v);
    if (big == small) big += 1;
    switch (k % 12) {
      case 0: return {big, small};
      case 1: return {small, big};
      case 2: return {-small, big};
      case 3: return {-big, small};
      case 4: return {-big, -small};
      case 5: return {-small, -big};
      case 6: return {small, -big};
      case 7: return {big, -small};
      case 8: return {u, 0};       // horizontal
      case 9: return {0, -u};      // vertical
      case 10: return {u, u};      // slope 1
      default: return {-u, u};     // slope -1
    }
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

// --- oracles -----------------------------------------------------------------

// Sign of a - b by cross-multiplication of the stored fractions.
inline int cmp_oracle(const Rational& a, const Rational& b) {
  Rational::Integer lhs = a.num() * b.den();
  Rational::Integer rhs = b.num() * a.den();
  return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
}

inline Point parametric_division(const Point& a, const Point& b, int k, int n) {
  return a + Rational(Rational::Integer(k), Rational::Integer(n)) * (b - a);
}

// Arc length from (1, 0) counterclockwise to u (on the unit taxicab circle),
// found by walking the corners and summing taxicab edge lengths.
inline Rational arc_length_oracle(const Point& u) {
  const std::array<Point, 5> corners = {Point{1, 0}, Point{0, 1}, Point{-1, 0}, Point{0, -1}, Point{1, 0}};
  Rational walked = 0;
  for (std::size_t i = 0; i + 1 < corners.size(); ++i) {
    const Point& from = corners[i];
    const Point& to = corners[i + 1];
    bool on_edge = u != to && Segment(from, to).contains(u);
    if (on_edge) return walked + taxicab_distance(from, u);
    walked += taxicab_distance(from, to);
  }
  return walked;  // unreachable for points on the circle
}

struct LineCircleOracle {
  std::vector<Point> points;  // sorted lexicographically
  bool overlap = false;
};

// Solves |x - cx| + |y - cy| = r on a*x + b*y = c by enumerating the four
// sign cases, each a linear system solved by Cramer's rule.
inline LineCircleOracle line_circle_oracle(const Rational& a, const Rational& b, const Rational& c,
                                           const Point& center, const Rational& r) {
  LineCircleOracle out;
  for (int sx : {1, -1}) {
    for (int sy : {1, -1}) {
      // sx*x + sy*y = r + sx*cx + sy*cy
      Rational a2 = sx;
      Rational b2 = sy;
      Rational c2 = r + Rational(sx) * center.x + Rational(sy) * center.y;
      Rational det = a * b2 - b * a2;
      if (det.is_zero()) {
        // Parallel: same line iff c scales the same way.
        Rational scale = a.is_zero() ? b / b2 : a / a2;
        if (c == scale * c2) out.overlap = true;
        continue;
      }
      Point p{(c * b2 - b * c2) / det, (a * c2 - c * a2) / det};
      bool in_quadrant = (Rational(sx) * (p.x - center.x)).sign() >= 0 &&
                         (Rational(sy) * (p.y - center.y)).sign() >= 0;
      if (in_quadrant && std::find(out.points.begin(), out.points.end(), p) == out.points.end()) {
        out.points.push_back(p);
      }
    }
  }
  std::sort(out.points.begin(), out.points.end(), [](const Point& p, const Point& q) {
    return p.x != q.x ? p.x < q.x : p.y < q.y;
  });
  return out;
}

// The eight symmetries of the square acting on vectors.
inline Point dihedral(int k, const Point& v) {
  switch (k % 8) {
    case 0: return v;
    case 1: return {-v.y, v.x};
    case 2: return {-v.x, -v.y};
    case 3: return {v.y, -v.x};
    case 4: return {v.x, -v.y};
    case 5: return {-v.x, v.y};
    case 6: return {v.y, v.x};
    default: return {-v.y, -v.x};
  }
}

}  // namespace taxisect::testing
