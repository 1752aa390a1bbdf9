#pragma once

/**
 * Exact rational scalar used for every coordinate, length and angle in the
 * kernel. Values are always in lowest terms with a positive denominator, so
 * structural equality is numeric equality.
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace taxisect {

class Rational {
 public:
  using Integer = boost::multiprecision::cpp_int;

  Rational() = default;
  Rational(std::int64_t value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  explicit Rational(const Integer& value) : value_(value) {}

  // Throws DivisionByZero when den == 0.
  Rational(const Integer& num, const Integer& den);

  // Accepts "p", "p/q" and plain decimals ("-0.25"), optionally signed.
  // Decimals convert exactly. Throws ParseError on malformed text and
  // DivisionByZero on "p/0".
  static Rational parse(std::string_view text);

  Integer num() const { return boost::multiprecision::numerator(value_); }
  Integer den() const { return boost::multiprecision::denominator(value_); }

  int sign() const;
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return den() == 1; }
  Rational abs() const;
  Rational reciprocal() const;

  // Largest integer <= value.
  Integer floor() const;

  // "p/q", with "/q" omitted when q == 1.
  std::string str() const;

  // Decimal text rounded (half away from zero) to at most `significant`
  // significant digits. Never uses exponent notation.
  std::string to_decimal(int significant = 12) const;

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  friend Rational operator-(const Rational& r);

  friend bool operator==(const Rational& lhs, const Rational& rhs) {
    return lhs.value_ == rhs.value_;
  }
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs);

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
  }

 private:
  boost::multiprecision::cpp_rational value_;
};

inline Rational abs(const Rational& r) { return r.abs(); }
inline const Rational& min(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline const Rational& max(const Rational& a, const Rational& b) { return a < b ? b : a; }

}  // namespace taxisect
