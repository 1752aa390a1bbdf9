#include "taxisect/rational.hpp"

#include "taxisect/errors.hpp"

#include <algorithm>
#include <cctype>

namespace taxisect {

namespace {

using Integer = Rational::Integer;

Integer pow10(int exponent) {
  Integer result = 1;
  for (int i = 0; i < exponent; ++i) result *= 10;
  return result;
}

bool all_digits(std::string_view s) {
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

// Positive integer division rounded half away from zero.
Integer round_div(const Integer& n, const Integer& d) { return (2 * n + d) / (2 * d); }

std::size_t digit_count(const Integer& v) { return v.str().size(); }

}  // namespace

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) throw DivisionByZero();
  value_ = den < 0 ? boost::multiprecision::cpp_rational(-num, -den) : boost::multiprecision::cpp_rational(num, den);
}

Rational Rational::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  auto fail = [&]() -> ParseError {
    return ParseError("malformed rational '" + std::string(text) + "'");
  };

  Rational result;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    auto num = body.substr(0, slash);
    auto den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) throw fail();
    result = Rational(Integer(std::string(num)), Integer(std::string(den)));
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    auto whole = body.substr(0, dot);
    auto frac = body.substr(dot + 1);
    if (!all_digits(whole) || !all_digits(frac)) throw fail();
    Integer scale = pow10(static_cast<int>(frac.size()));
    result = Rational(Integer(std::string(whole)) * scale + Integer(std::string(frac)), scale);
  } else {
    if (!all_digits(body)) throw fail();
    result = Rational(Integer(std::string(body)));
  }
  return negative ? -result : result;
}

int Rational::sign() const { return value_.sign(); }

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

Rational Rational::reciprocal() const { return Rational(1) / *this; }

Rational::Integer Rational::floor() const {
  Integer n = num();
  Integer d = den();
  Integer q = n / d;  // truncates toward zero
  if (n < 0 && q * d != n) --q;
  return q;
}

std::string Rational::str() const {
  if (is_integer()) return num().str();
  return num().str() + "/" + den().str();
}

std::string Rational::to_decimal(int significant) const {
  if (is_zero()) return "0";
  Integer a = boost::multiprecision::abs(num());
  Integer b = den();

  // exponent = floor(log10(a / b))
  int exponent = static_cast<int>(digit_count(a)) - static_cast<int>(digit_count(b));
  auto below = [&](int k) {
    return k >= 0 ? a < b * pow10(k) : a * pow10(-k) < b;
  };
  if (below(exponent)) --exponent;

  int shift = significant - 1 - exponent;  // value ~= mantissa * 10^-shift
  Integer mantissa = shift >= 0 ? round_div(a * pow10(shift), b) : round_div(a, b * pow10(-shift));
  if (mantissa == pow10(significant)) {
    mantissa /= 10;
    --shift;
  }

  std::string digits = mantissa.str();
  std::string out;
  if (shift <= 0) {
    out = digits + std::string(static_cast<std::size_t>(-shift), '0');
  } else {
    auto frac_len = static_cast<std::size_t>(shift);
    if (digits.size() <= frac_len) digits.insert(0, frac_len - digits.size() + 1, '0');
    out = digits.substr(0, digits.size() - frac_len) + "." + digits.substr(digits.size() - frac_len);
    while (out.back() == '0') out.pop_back();
    if (out.back() == '.') out.pop_back();
  }
  return sign() < 0 ? "-" + out : out;
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw DivisionByZero();
  value_ /= rhs.value_;
  return *this;
}

Rational operator-(const Rational& r) {
  Rational out;
  out.value_ = -r.value_;
  return out;
}

std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
  if (lhs.value_ < rhs.value_) return std::strong_ordering::less;
  if (lhs.value_ > rhs.value_) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace taxisect
