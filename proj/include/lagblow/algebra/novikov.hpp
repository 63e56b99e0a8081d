#pragma once

#include "lagblow/rational.hpp"

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace lagblow::algebra {

/// Finite GF(2) formal sum  sum_i T^{e_i}  over rational exponents.
///
/// The support is stored sorted and duplicate-free; a coefficient is 1 when
/// its exponent is present and 0 otherwise, so addition is the symmetric
/// difference of supports. When every exponent is an integer the value is a
/// Laurent polynomial in t over GF(2).
class NovikovScalar {
public:
  NovikovScalar() = default;

  /// Builds a scalar from a multiset of exponents; repeated exponents cancel
  /// in pairs.
  static NovikovScalar from_exponents(std::vector<Rational> exponents);
  static NovikovScalar from_exponents(std::initializer_list<std::int64_t> exponents);
  static NovikovScalar monomial(const Rational& exponent);
  static NovikovScalar one() { return monomial(Rational{0}); }

  bool is_zero() const noexcept { return support_.empty(); }
  bool is_one() const noexcept { return support_.size() == 1 && support_.front() == 0; }
  /// Nonzero monomials are exactly the units of the group ring.
  bool is_unit() const noexcept { return support_.size() == 1; }
  bool has_integer_exponents() const noexcept;

  std::span<const Rational> exponents() const noexcept { return support_; }
  std::size_t term_count() const noexcept { return support_.size(); }
  bool coefficient(const Rational& exponent) const;

  /// Lowest/highest exponent; precondition: nonzero.
  const Rational& min_exponent() const;
  const Rational& max_exponent() const;
  /// max - min exponent (the Euclidean norm used for pivoting); 0 for zero.
  Rational degree_span() const;

  /// Multiplies every exponent by `factor` (a ring automorphism for factor != 0).
  NovikovScalar rescaled(const Rational& factor) const;
  NovikovScalar shifted(const Rational& by) const;

  NovikovScalar& operator+=(const NovikovScalar& other);
  NovikovScalar& operator*=(const NovikovScalar& other);
  friend NovikovScalar operator+(NovikovScalar a, const NovikovScalar& b) { return a += b; }
  // Characteristic 2: subtraction is addition.
  friend NovikovScalar operator-(NovikovScalar a, const NovikovScalar& b) { return a += b; }
  friend NovikovScalar operator*(const NovikovScalar& a, const NovikovScalar& b);

  bool operator==(const NovikovScalar&) const = default;

  std::string to_string() const;

private:
  std::vector<Rational> support_;
};

NovikovScalar scalar_add(const NovikovScalar& a, const NovikovScalar& b);
NovikovScalar scalar_mul(const NovikovScalar& a, const NovikovScalar& b);

/// Euclidean division in GF(2)[t, 1/t]: a = q*b + r with r == 0 or
/// span(r) < span(b). Both operands must have integer exponents and b != 0.
std::pair<NovikovScalar, NovikovScalar> divide_with_remainder(const NovikovScalar& a,
                                                              const NovikovScalar& b);

/// True when b divides a in GF(2)[t, 1/t].
bool divides(const NovikovScalar& b, const NovikovScalar& a);

/// a / b when the division is exact; throws Error(InputError) otherwise.
NovikovScalar exact_quotient(const NovikovScalar& a, const NovikovScalar& b);

/// Scales by the inverse of the lowest monomial so the lowest exponent is 0.
NovikovScalar normalized(const NovikovScalar& a);

}  // namespace lagblow::algebra
