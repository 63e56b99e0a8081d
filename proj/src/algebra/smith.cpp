#include "lagblow/algebra/smith.hpp"

#include "lagblow/error.hpp"

#include <optional>
#include <utility>

namespace lagblow::algebra {

namespace {

// Working state: A = U * M * V is maintained after every operation.
struct Reduction {
  ScalarMatrix A;
  ScalarMatrix U;
  ScalarMatrix V;

  void swap_rows(std::size_t a, std::size_t b) {
    A.swap_rows(a, b);
    U.swap_rows(a, b);
  }
  void swap_cols(std::size_t a, std::size_t b) {
    A.swap_cols(a, b);
    V.swap_cols(a, b);
  }
  void add_row(std::size_t target, std::size_t source, const NovikovScalar& f) {
    A.add_row_multiple(target, source, f);
    U.add_row_multiple(target, source, f);
  }
  void add_col(std::size_t target, std::size_t source, const NovikovScalar& f) {
    A.add_col_multiple(target, source, f);
    V.add_col_multiple(target, source, f);
  }
  void scale_row(std::size_t r, const NovikovScalar& unit) {
    A.scale_row(r, unit);
    U.scale_row(r, unit);
  }

  // Least-span nonzero entry in the block [k.., k..], first in row-major order.
  std::optional<std::pair<std::size_t, std::size_t>> pivot(std::size_t k) const {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    Rational best_span{0};
    for (std::size_t i = k; i < A.rows(); ++i) {
      for (std::size_t j = k; j < A.cols(); ++j) {
        const auto& e = A(i, j);
        if (e.is_zero()) continue;
        const Rational span = e.degree_span();
        if (!best || span < best_span) {
          best = {i, j};
          best_span = span;
        }
      }
    }
    return best;
  }

  // Clears row k and column k outside the pivot. Returns false if some
  // remainder was nonzero, which means a smaller pivot is now available.
  bool clear_cross(std::size_t k) {
    bool clean = true;
    const NovikovScalar p = A(k, k);
    for (std::size_t i = k + 1; i < A.rows(); ++i) {
      if (A(i, k).is_zero()) continue;
      auto [q, r] = divide_with_remainder(A(i, k), p);
      add_row(i, k, q);
      if (!r.is_zero()) clean = false;
    }
    for (std::size_t j = k + 1; j < A.cols(); ++j) {
      if (A(k, j).is_zero()) continue;
      auto [q, r] = divide_with_remainder(A(k, j), p);
      add_col(j, k, q);
      if (!r.is_zero()) clean = false;
    }
    return clean;
  }

  // Row of the first entry in the trailing block not divisible by the pivot.
  std::optional<std::size_t> non_divisible_row(std::size_t k) const {
    const NovikovScalar& p = A(k, k);
    for (std::size_t i = k + 1; i < A.rows(); ++i) {
      for (std::size_t j = k + 1; j < A.cols(); ++j) {
        if (!A(i, j).is_zero() && !divides(p, A(i, j))) return i;
      }
    }
    return std::nullopt;
  }
};

}  // namespace

SNFResult smith_normal_form(const ScalarMatrix& m) {
  if (!m.has_integer_exponents()) {
    throw Error(ErrorKind::NonIntegerExponent,
                "smith_normal_form needs integer exponents; rescale by a common denominator first");
  }
  Reduction red{m, ScalarMatrix::identity(m.rows()), ScalarMatrix::identity(m.cols())};
  std::vector<NovikovScalar> divisors;

  const std::size_t steps = std::min(m.rows(), m.cols());
  for (std::size_t k = 0; k < steps; ++k) {
    bool settled = false;
    while (!settled) {
      const auto pos = red.pivot(k);
      if (!pos) break;
      red.swap_rows(k, pos->first);
      red.swap_cols(k, pos->second);
      if (!red.clear_cross(k)) continue;
      if (const auto row = red.non_divisible_row(k)) {
        red.add_row(k, *row, NovikovScalar::one());
        continue;
      }
      settled = true;
    }
    if (!settled) break;
    const NovikovScalar& p = red.A(k, k);
    if (p.min_exponent() != 0) red.scale_row(k, NovikovScalar::monomial(-p.min_exponent()));
    divisors.push_back(red.A(k, k));
  }
  return SNFResult{std::move(red.A), std::move(red.U), std::move(red.V), std::move(divisors)};
}

}  // namespace lagblow::algebra
