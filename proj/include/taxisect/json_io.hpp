#pragma once

// JSON encodings shared by scene and environment export. Rationals are
// strings "p/q"; points are two-element arrays of such strings.

#include "taxisect/geometry.hpp"

#include <json.hpp>

namespace taxisect {

inline nlohmann::json json_of(const Rational& r) { return r.str(); }
inline nlohmann::json json_of(const Point& p) { return nlohmann::json::array({p.x.str(), p.y.str()}); }

nlohmann::json json_of(const Direction& d);
nlohmann::json json_of(const Line& l);
nlohmann::json json_of(const Ray& r);
nlohmann::json json_of(const Segment& s);
nlohmann::json json_of(const TaxicabCircle& c);

Rational rational_from_json(const nlohmann::json& j);
Point point_from_json(const nlohmann::json& j);

// Two-space indented, keys sorted, trailing newline.
std::string canonical_dump(const nlohmann::json& j);

}  // namespace taxisect
