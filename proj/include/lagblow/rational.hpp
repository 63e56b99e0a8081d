#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace lagblow {

__extension__ using Wide = __int128;

/// Exact rational with 64-bit numerator and denominator, always in lowest
/// terms with a positive denominator. Arithmetic is overflow-checked and
/// throws Error(InputError) rather than wrapping.
///
/// Used for areas (in units of pi), monotonicity constants (in units of
/// 1/pi) and Novikov exponents.
class Rational {
public:
  constexpr Rational() = default;
  Rational(std::int64_t value) : num_(value) {}  // NOLINT: implicit by design of the literals
  Rational(std::int64_t num, std::int64_t den);

  std::int64_t numerator() const noexcept { return num_; }
  std::int64_t denominator() const noexcept { return den_; }

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

private:
  static Rational from_wide(Wide num, Wide den);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

std::string to_string(const Rational& r);

/// Accepts "p/q", "p" and optional surrounding whitespace or a leading sign.
/// Throws Error(ParseError) on anything else or a zero denominator.
Rational parse_rational(const std::string& text);

inline bool is_integer(const Rational& r) { return r.denominator() == 1; }

}  // namespace lagblow
