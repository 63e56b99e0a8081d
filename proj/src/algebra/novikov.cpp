#include "lagblow/algebra/novikov.hpp"

#include "lagblow/error.hpp"

#include <algorithm>
#include <sstream>

namespace lagblow::algebra {

namespace {

// Sorts and removes exponents that occur an even number of times.
std::vector<Rational> canonical(std::vector<Rational> exps) {
  std::sort(exps.begin(), exps.end());
  std::vector<Rational> out;
  out.reserve(exps.size());
  for (std::size_t i = 0; i < exps.size();) {
    std::size_t j = i;
    while (j < exps.size() && exps[j] == exps[i]) ++j;
    if ((j - i) % 2 == 1) out.push_back(exps[i]);
    i = j;
  }
  return out;
}

void require_integer(const NovikovScalar& s, const char* what) {
  if (!s.has_integer_exponents()) {
    throw Error(ErrorKind::NonIntegerExponent,
                std::string(what) + " needs integer exponents, got " + s.to_string());
  }
}

}  // namespace

NovikovScalar NovikovScalar::from_exponents(std::vector<Rational> exponents) {
  NovikovScalar s;
  s.support_ = canonical(std::move(exponents));
  return s;
}

NovikovScalar NovikovScalar::from_exponents(std::initializer_list<std::int64_t> exponents) {
  std::vector<Rational> exps;
  exps.reserve(exponents.size());
  for (auto e : exponents) exps.emplace_back(e);
  return from_exponents(std::move(exps));
}

NovikovScalar NovikovScalar::monomial(const Rational& exponent) {
  NovikovScalar s;
  s.support_.push_back(exponent);
  return s;
}

bool NovikovScalar::has_integer_exponents() const noexcept {
  return std::all_of(support_.begin(), support_.end(),
                     [](const Rational& e) { return e.denominator() == 1; });
}

bool NovikovScalar::coefficient(const Rational& exponent) const {
  return std::binary_search(support_.begin(), support_.end(), exponent);
}

const Rational& NovikovScalar::min_exponent() const {
  if (support_.empty()) throw Error(ErrorKind::InputError, "min_exponent of zero scalar");
  return support_.front();
}

const Rational& NovikovScalar::max_exponent() const {
  if (support_.empty()) throw Error(ErrorKind::InputError, "max_exponent of zero scalar");
  return support_.back();
}

Rational NovikovScalar::degree_span() const {
  if (support_.empty()) return Rational{0};
  return support_.back() - support_.front();
}

NovikovScalar NovikovScalar::rescaled(const Rational& factor) const {
  if (factor == 0) throw Error(ErrorKind::InputError, "exponent rescale by zero");
  NovikovScalar s;
  s.support_.reserve(support_.size());
  for (const auto& e : support_) s.support_.push_back(e * factor);
  if (factor < 0) std::reverse(s.support_.begin(), s.support_.end());
  return s;
}

NovikovScalar NovikovScalar::shifted(const Rational& by) const {
  NovikovScalar s = *this;
  for (auto& e : s.support_) e += by;
  return s;
}

NovikovScalar& NovikovScalar::operator+=(const NovikovScalar& other) {
  std::vector<Rational> out;
  out.reserve(support_.size() + other.support_.size());
  std::set_symmetric_difference(support_.begin(), support_.end(), other.support_.begin(),
                                other.support_.end(), std::back_inserter(out));
  support_ = std::move(out);
  return *this;
}

NovikovScalar operator*(const NovikovScalar& a, const NovikovScalar& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.is_unit()) return b.shifted(a.support_.front());
  if (b.is_unit()) return a.shifted(b.support_.front());
  std::vector<Rational> exps;
  exps.reserve(a.support_.size() * b.support_.size());
  for (const auto& x : a.support_) {
    for (const auto& y : b.support_) exps.push_back(x + y);
  }
  NovikovScalar s;
  s.support_ = canonical(std::move(exps));
  return s;
}

NovikovScalar& NovikovScalar::operator*=(const NovikovScalar& other) {
  *this = *this * other;
  return *this;
}

std::string NovikovScalar::to_string() const {
  if (support_.empty()) return "0";
  std::ostringstream out;
  for (std::size_t i = 0; i < support_.size(); ++i) {
    if (i > 0) out << " + ";
    const auto& e = support_[i];
    if (e == 0) {
      out << "1";
    } else if (e == 1) {
      out << "t";
    } else if (e.denominator() == 1) {
      out << "t^" << e.numerator();
    } else {
      out << "t^(" << lagblow::to_string(e) << ")";
    }
  }
  return out.str();
}

NovikovScalar scalar_add(const NovikovScalar& a, const NovikovScalar& b) { return a + b; }

NovikovScalar scalar_mul(const NovikovScalar& a, const NovikovScalar& b) { return a * b; }

std::pair<NovikovScalar, NovikovScalar> divide_with_remainder(const NovikovScalar& a,
                                                              const NovikovScalar& b) {
  require_integer(a, "division");
  require_integer(b, "division");
  if (b.is_zero()) throw Error(ErrorKind::InputError, "division by zero scalar");
  if (a.is_zero()) return {NovikovScalar{}, NovikovScalar{}};
  if (b.is_unit()) return {a.shifted(-b.min_exponent()), NovikovScalar{}};

  // Long division of the normalized polynomials A = Q*B + R, deg R < deg B.
  const Rational a_low = a.min_exponent();
  const Rational b_low = b.min_exponent();
  const NovikovScalar divisor = b.shifted(-b_low);
  const Rational divisor_deg = divisor.max_exponent();

  NovikovScalar remainder = a.shifted(-a_low);
  std::vector<Rational> quotient_terms;
  while (!remainder.is_zero() && remainder.max_exponent() >= divisor_deg) {
    const Rational shift = remainder.max_exponent() - divisor_deg;
    quotient_terms.push_back(shift);
    remainder += divisor.shifted(shift);
  }
  NovikovScalar quotient = NovikovScalar::from_exponents(std::move(quotient_terms));
  // a = t^{a_low} (Q B + R) = t^{a_low - b_low} Q * b + t^{a_low} R
  return {quotient.shifted(a_low - b_low), remainder.shifted(a_low)};
}

bool divides(const NovikovScalar& b, const NovikovScalar& a) {
  if (b.is_zero()) return a.is_zero();
  return divide_with_remainder(a, b).second.is_zero();
}

NovikovScalar exact_quotient(const NovikovScalar& a, const NovikovScalar& b) {
  auto [q, r] = divide_with_remainder(a, b);
  if (!r.is_zero()) {
    throw Error(ErrorKind::InputError,
                "inexact division of " + a.to_string() + " by " + b.to_string());
  }
  return q;
}

NovikovScalar normalized(const NovikovScalar& a) {
  if (a.is_zero()) return a;
  return a.shifted(-a.min_exponent());
}

}  // namespace lagblow::algebra
