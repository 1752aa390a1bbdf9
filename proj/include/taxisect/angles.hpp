#pragma once

// t-radian measure. Directions are mapped to cumulative taxicab arc length
// along the unit taxicab circle, counterclockwise from the East vertex (1, 0).
// The full circle is 8 t-radians.

#include "taxisect/geometry.hpp"

namespace taxisect {

inline const Rational kFullTurn{8};
inline const Rational kStraightAngle{4};  // pi_t

// Arc parameter on the unit taxicab circle, always in [0, 8).
class ArcParam {
 public:
  explicit ArcParam(Rational t);  // throws DomainError outside [0, 8)

  // Reduces any rational modulo 8 into range.
  static ArcParam wrap(const Rational& t);

  const Rational& value() const { return t_; }
  friend bool operator==(const ArcParam&, const ArcParam&) = default;

 private:
  Rational t_;
};

struct Angle {
  Point vertex;
  Direction side1;
  Direction side2;
};

// The point d / (|dx| + |dy|) on the unit circle.
Point normalize_to_unit_circle(const Direction& d);

ArcParam direction_to_param(const Direction& d);
Point param_to_point(const ArcParam& t);

// Undirected measure in [0, 4].
Rational measure_angle(const Angle& a);

// Counterclockwise sweep from side1 to side2, in [0, 8).
Rational directed_measure(const Direction& from, const Direction& to);

Rational circumference(const TaxicabCircle& c);

}  // namespace taxisect
