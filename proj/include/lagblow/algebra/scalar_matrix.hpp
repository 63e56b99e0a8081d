#pragma once

#include "lagblow/algebra/novikov.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace lagblow::algebra {

/// Dense row-major matrix of NovikovScalar entries. Shape is fixed at
/// construction.
class ScalarMatrix {
public:
  ScalarMatrix() = default;
  ScalarMatrix(std::size_t rows, std::size_t cols);
  ScalarMatrix(std::size_t rows, std::size_t cols, std::vector<NovikovScalar> entries);

  static ScalarMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  NovikovScalar& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const NovikovScalar& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  bool is_zero() const;
  bool has_integer_exponents() const;

  /// Submatrix picking the listed rows and columns in the given order.
  ScalarMatrix select(std::span<const std::size_t> row_ids,
                      std::span<const std::size_t> col_ids) const;

  ScalarMatrix rescaled_exponents(const Rational& factor) const;

  /// Least common multiple of all exponent denominators (1 for the zero matrix).
  std::int64_t exponent_denominator_lcm() const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[target] += factor * row[source]
  void add_row_multiple(std::size_t target, std::size_t source, const NovikovScalar& factor);
  /// col[target] += factor * col[source]
  void add_col_multiple(std::size_t target, std::size_t source, const NovikovScalar& factor);
  void scale_row(std::size_t r, const NovikovScalar& factor);

  bool operator==(const ScalarMatrix&) const = default;

  std::string to_string() const;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<NovikovScalar> entries_;
};

/// Throws Error(DimensionMismatch) when the inner dimensions differ.
ScalarMatrix operator*(const ScalarMatrix& a, const ScalarMatrix& b);
ScalarMatrix operator+(const ScalarMatrix& a, const ScalarMatrix& b);

/// Fraction-free (Bareiss) determinant over GF(2)[t, 1/t]; integer exponents only.
NovikovScalar determinant(const ScalarMatrix& m);

/// Rank over the fraction field of the exponent group ring.
///
/// Rational exponents are first rescaled to integers by their common
/// denominator (an automorphism of the group ring, so the rank is unchanged);
/// elimination then cross-multiplies rows and divides exactly by the previous
/// pivot, never inverting a scalar.
std::size_t rank_over_fraction_field(const ScalarMatrix& m);

}  // namespace lagblow::algebra
