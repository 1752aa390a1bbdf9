#include "support.hpp"

#include "taxisect/angles.hpp"

#include <doctest.h>

using namespace taxisect;
using taxisect::testing::arc_length_oracle;
using taxisect::testing::dihedral;
using taxisect::testing::Gen;

namespace {

Rational q(long long p, long long d = 1) { return Rational(Rational::Integer(p), Rational::Integer(d)); }

Rational measure(const Point& d1, const Point& d2) {
  return measure_angle(Angle{{0, 0}, Direction::of(d1), Direction::of(d2)});
}

}  // namespace

TEST_CASE("direction_to_param") {
  CHECK(direction_to_param(Direction(1, 0)).value() == 0);
  CHECK(direction_to_param(Direction(1, 1)).value() == 1);
  CHECK(direction_to_param(Direction(3, 4)).value() == q(8, 7));
  CHECK(arc_length_oracle({q(3, 7), q(4, 7)}) == q(8, 7));
  CHECK(direction_to_param(Direction(0, 1)).value() == 2);
  CHECK(direction_to_param(Direction(-1, 0)).value() == 4);
  CHECK(direction_to_param(Direction(0, -5)).value() == 6);
  CHECK(direction_to_param(Direction(1, -1)).value() == 7);
  CHECK_THROWS_AS(Direction(0, 0), DomainError);
}

TEST_CASE("direction_to_param matches the corner-walk oracle") {
  Gen gen(31);
  for (int i = 0; i < 1000; ++i) {
    Direction d = Direction::of(gen.nonzero_vector());
    CHECK(direction_to_param(d).value() == arc_length_oracle(normalize_to_unit_circle(d)));
  }
}

TEST_CASE("param_to_point") {
  CHECK(param_to_point(ArcParam(0)) == Point{1, 0});
  CHECK(param_to_point(ArcParam(1)) == Point{q(1, 2), q(1, 2)});
  CHECK(param_to_point(ArcParam(q(1, 2))) == Point{q(3, 4), q(1, 4)});
  CHECK(param_to_point(ArcParam(6)) == Point{0, -1});
  CHECK_THROWS_AS(ArcParam(8), DomainError);
  CHECK_THROWS_AS(ArcParam(q(-1, 3)), DomainError);
  CHECK(ArcParam::wrap(q(17, 2)).value() == q(1, 2));
  CHECK(ArcParam::wrap(q(-1, 2)).value() == q(15, 2));
}

TEST_CASE("param round trip") {
  Gen gen(32);
  for (int i = 0; i < 500; ++i) {
    ArcParam t = ArcParam::wrap(gen.rational());
    Point u = param_to_point(t);
    CHECK(taxicab_distance({0, 0}, u) == 1);
    CHECK(direction_to_param(Direction::of(u)) == t);
  }
}

TEST_CASE("measure_angle examples") {
  CHECK(measure({1, 0}, {1, 1}) == 1);
  CHECK(measure({1, 0}, {-1, 0}) == 4);
  CHECK(measure({1, 0}, {3, 4}) == q(8, 7));
  CHECK(measure({1, 0}, {0, -1}) == 2);
  CHECK(measure({1, 1}, {1, -1}) == 2);
  CHECK(measure({2, 3}, {4, 6}) == 0);
}

TEST_CASE("straight angles measure pi_t") {
  Gen gen(33);
  CHECK(circumference(TaxicabCircle({0, 0}, 1)) / 2 == kStraightAngle);
  for (int i = 0; i < 200; ++i) {
    Point v = gen.nonzero_vector();
    CHECK(measure(v, Point{-v.x, -v.y}) == 4);
    CHECK(measure(v, gen.positive() * v) == 0);
  }
}

TEST_CASE("measure is invariant under scaling, translation and the dihedral group") {
  Gen gen(34);
  for (int i = 0; i < 300; ++i) {
    Point d1 = gen.nonzero_vector(), d2 = gen.nonzero_vector();
    Rational m = measure(d1, d2);
    CHECK(m.sign() >= 0);
    CHECK(m <= 4);
    CHECK(measure(gen.positive() * d1, gen.positive() * d2) == m);
    CHECK(measure_angle(Angle{gen.point(), Direction::of(d1), Direction::of(d2)}) == m);
    CHECK(measure(d2, d1) == m);
    for (int k = 0; k < 8; ++k) CHECK(measure(dihedral(k, d1), dihedral(k, d2)) == m);
  }
}

TEST_CASE("measure is additive for counterclockwise rays within a half turn") {
  Gen gen(35);
  for (int i = 0; i < 300; ++i) {
    Rational start = ArcParam::wrap(gen.rational()).value();
    Rational s1 = gen.positive(50), s2 = gen.positive(50);
    Rational scale = Rational(4) / (s1 + s2) * gen.integer(1, 100) / 100;
    Point r1 = param_to_point(ArcParam::wrap(start));
    Point r2 = param_to_point(ArcParam::wrap(start + s1 * scale));
    Point r3 = param_to_point(ArcParam::wrap(start + (s1 + s2) * scale));
    CHECK(measure(r1, r3) == measure(r1, r2) + measure(r2, r3));
  }
}

TEST_CASE("circumference") {
  CHECK(circumference(TaxicabCircle({0, 0}, 1)) == 8);
  CHECK(circumference(TaxicabCircle({0, 0}, q(1, 2))) == 4);
  Rational l = 3;
  CHECK(circumference(TaxicabCircle({0, 0}, 2 * l)) == 48);
}
