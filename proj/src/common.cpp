#include "lagblow/error.hpp"
#include "lagblow/rational.hpp"

#include <charconv>
#include <limits>
#include <string>

namespace lagblow {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonIntegerExponent: return "NonIntegerExponent";
    case ErrorKind::NotAComplex: return "NotAComplex";
    case ErrorKind::NoClasses: return "NoClasses";
    case ErrorKind::NegativeMultiplicity: return "NegativeMultiplicity";
    case ErrorKind::BadExponent: return "BadExponent";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotAdmissible: return "NotAdmissible";
    case ErrorKind::NotDimensionFour: return "NotDimensionFour";
    case ErrorKind::BadIndex: return "BadIndex";
    case ErrorKind::InputError: return "InputError";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ValidationError: return "ValidationError";
    case ErrorKind::UnknownExample: return "UnknownExample";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, std::string message, std::vector<std::string> diagnostics)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message),
      kind_(kind),
      diagnostics_(std::move(diagnostics)) {}

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error(ErrorKind::InputError, "rational with zero denominator");
  *this = from_wide(num, den);
}

Rational Rational::from_wide(Wide num, Wide den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  Wide a = num < 0 ? -num : num;
  Wide b = den;
  while (b != 0) {
    const Wide t = a % b;
    a = b;
    b = t;
  }
  if (a > 1) {
    num /= a;
    den /= a;
  }
  constexpr Wide lo = std::numeric_limits<std::int64_t>::min() + 1;
  constexpr Wide hi = std::numeric_limits<std::int64_t>::max();
  if (num < lo || num > hi || den > hi) {
    throw Error(ErrorKind::InputError, "rational arithmetic overflow");
  }
  Rational r;
  r.num_ = static_cast<std::int64_t>(num);
  r.den_ = static_cast<std::int64_t>(den);
  return r;
}

Rational Rational::operator-() const { return from_wide(-static_cast<Wide>(num_), den_); }

Rational& Rational::operator+=(const Rational& o) {
  if (den_ == 1 && o.den_ == 1) return *this = from_wide(static_cast<Wide>(num_) + o.num_, 1);
  return *this = from_wide(static_cast<Wide>(num_) * o.den_ + static_cast<Wide>(o.num_) * den_,
                           static_cast<Wide>(den_) * o.den_);
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
  return *this = from_wide(static_cast<Wide>(num_) * o.num_, static_cast<Wide>(den_) * o.den_);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.num_ == 0) throw Error(ErrorKind::InputError, "rational division by zero");
  return *this = from_wide(static_cast<Wide>(num_) * o.den_, static_cast<Wide>(den_) * o.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (a.den_ == b.den_) return a.num_ <=> b.num_;
  const Wide lhs = static_cast<Wide>(a.num_) * b.den_;
  const Wide rhs = static_cast<Wide>(b.num_) * a.den_;
  return lhs < rhs ? std::strong_ordering::less
                   : (lhs > rhs ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

namespace {

bool parse_int(std::string_view text, std::int64_t& out) {
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  if (text.empty()) return false;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, out);
  return ec == std::errc{} && ptr == end;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::string_view view = text;
  while (!view.empty() && (view.front() == ' ' || view.front() == '\t')) view.remove_prefix(1);
  while (!view.empty() && (view.back() == ' ' || view.back() == '\t')) view.remove_suffix(1);

  std::int64_t num = 0;
  std::int64_t den = 1;
  const auto slash = view.find('/');
  const bool ok = slash == std::string_view::npos
                      ? parse_int(view, num)
                      : parse_int(view.substr(0, slash), num) && parse_int(view.substr(slash + 1), den);
  if (!ok || den == 0) {
    throw Error(ErrorKind::ParseError, "not a rational literal: \"" + text + "\"");
  }
  return Rational{num, den};
}

}  // namespace lagblow
