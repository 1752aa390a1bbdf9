#include "taxisect/json_io.hpp"

namespace taxisect {

using nlohmann::json;

json json_of(const Direction& d) { return {{"kind", "direction"}, {"dx", d.dx().str()}, {"dy", d.dy().str()}}; }

json json_of(const Line& l) {
  return {{"kind", "line"}, {"a", l.a().str()}, {"b", l.b().str()}, {"c", l.c().str()}};
}

json json_of(const Ray& r) {
  return {{"kind", "ray"}, {"origin", json_of(r.origin)}, {"dir", json_of(r.dir.vec())}};
}

json json_of(const Segment& s) {
  return {{"kind", "segment"}, {"p", json_of(s.p())}, {"q", json_of(s.q())}};
}

json json_of(const TaxicabCircle& c) {
  return {{"kind", "circle"}, {"center", json_of(c.center())}, {"radius", c.radius().str()}};
}

Rational rational_from_json(const json& j) { return Rational::parse(j.get<std::string>()); }

Point point_from_json(const json& j) {
  return {rational_from_json(j.at(0)), rational_from_json(j.at(1))};
}

std::string canonical_dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace taxisect
