#include "taxisect/angles.hpp"

#include "taxisect/errors.hpp"

namespace taxisect {

ArcParam::ArcParam(Rational t) : t_(std::move(t)) {
  if (t_.sign() < 0 || t_ >= kFullTurn) {
    throw DomainError("arc parameter " + t_.str() + " outside [0, 8)");
  }
}

ArcParam ArcParam::wrap(const Rational& t) {
  Rational turns((t / kFullTurn).floor());
  return ArcParam(t - turns * kFullTurn);
}

Point normalize_to_unit_circle(const Direction& d) {
  Rational n = d.norm();
  return {d.dx() / n, d.dy() / n};
}

ArcParam direction_to_param(const Direction& d) {
  const Point u = normalize_to_unit_circle(d);
  // One edge per quadrant; along each edge the arc length grows by 2 per unit
  // of the coordinate that moves away from the starting vertex.
  if (u.x.sign() > 0 && u.y.sign() >= 0) return ArcParam(2 * u.y);
  if (u.x.sign() <= 0 && u.y.sign() > 0) return ArcParam(2 - 2 * u.x);
  if (u.x.sign() < 0 && u.y.sign() <= 0) return ArcParam(4 - 2 * u.y);
  return ArcParam(6 + 2 * u.x);
}

Point param_to_point(const ArcParam& t) {
  Rational quadrant(( t.value() / 2).floor());
  Rational s = t.value() - 2 * quadrant;  // in [0, 2)
  Rational h = s / 2;
  if (quadrant == 0) return {1 - h, h};
  if (quadrant == 1) return {-h, 1 - h};
  if (quadrant == 2) return {h - 1, -h};
  return {h, h - 1};
}

Rational directed_measure(const Direction& from, const Direction& to) {
  return ArcParam::wrap(direction_to_param(to).value() - direction_to_param(from).value()).value();
}

Rational measure_angle(const Angle& a) {
  Rational d = directed_measure(a.side1, a.side2);
  return min(d, kFullTurn - d);
}

Rational circumference(const TaxicabCircle& c) { return kFullTurn * c.radius(); }

}  // namespace taxisect
