#include "lagblow/algebra/scalar_matrix.hpp"

#include "lagblow/error.hpp"

#include <numeric>
#include <optional>
#include <sstream>

namespace lagblow::algebra {

ScalarMatrix::ScalarMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

ScalarMatrix::ScalarMatrix(std::size_t rows, std::size_t cols, std::vector<NovikovScalar> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols) {
    throw Error(ErrorKind::DimensionMismatch, "entry count does not match matrix shape");
  }
}

ScalarMatrix ScalarMatrix::identity(std::size_t n) {
  ScalarMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = NovikovScalar::one();
  return m;
}

bool ScalarMatrix::is_zero() const {
  for (const auto& e : entries_) {
    if (!e.is_zero()) return false;
  }
  return true;
}

bool ScalarMatrix::has_integer_exponents() const {
  for (const auto& e : entries_) {
    if (!e.has_integer_exponents()) return false;
  }
  return true;
}

ScalarMatrix ScalarMatrix::select(std::span<const std::size_t> row_ids,
                                  std::span<const std::size_t> col_ids) const {
  ScalarMatrix out(row_ids.size(), col_ids.size());
  for (std::size_t i = 0; i < row_ids.size(); ++i) {
    for (std::size_t j = 0; j < col_ids.size(); ++j) out(i, j) = (*this)(row_ids[i], col_ids[j]);
  }
  return out;
}

ScalarMatrix ScalarMatrix::rescaled_exponents(const Rational& factor) const {
  ScalarMatrix out(rows_, cols_);
  for (std::size_t k = 0; k < entries_.size(); ++k) out.entries_[k] = entries_[k].rescaled(factor);
  return out;
}

std::int64_t ScalarMatrix::exponent_denominator_lcm() const {
  std::int64_t l = 1;
  for (const auto& e : entries_) {
    for (const auto& x : e.exponents()) l = std::lcm(l, x.denominator());
  }
  return l;
}

void ScalarMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void ScalarMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void ScalarMatrix::add_row_multiple(std::size_t target, std::size_t source,
                                    const NovikovScalar& factor) {
  if (factor.is_zero()) return;
  for (std::size_t c = 0; c < cols_; ++c) {
    const auto& s = (*this)(source, c);
    if (!s.is_zero()) (*this)(target, c) += factor * s;
  }
}

void ScalarMatrix::add_col_multiple(std::size_t target, std::size_t source,
                                    const NovikovScalar& factor) {
  if (factor.is_zero()) return;
  for (std::size_t r = 0; r < rows_; ++r) {
    const auto& s = (*this)(r, source);
    if (!s.is_zero()) (*this)(r, target) += factor * s;
  }
}

void ScalarMatrix::scale_row(std::size_t r, const NovikovScalar& factor) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) *= factor;
}

std::string ScalarMatrix::to_string() const {
  std::ostringstream out;
  out << "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    out << (r == 0 ? "[" : " [");
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c > 0) out << ", ";
      out << (*this)(r, c).to_string();
    }
    out << "]";
  }
  out << "]";
  return out.str();
}

ScalarMatrix operator*(const ScalarMatrix& a, const ScalarMatrix& b) {
  if (a.cols() != b.rows()) {
    throw Error(ErrorKind::DimensionMismatch, "matrix product of incompatible shapes");
  }
  ScalarMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const auto& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        const auto& y = b(k, j);
        if (!y.is_zero()) out(i, j) += x * y;
      }
    }
  }
  return out;
}

ScalarMatrix operator+(const ScalarMatrix& a, const ScalarMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorKind::DimensionMismatch, "matrix sum of incompatible shapes");
  }
  ScalarMatrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) += b(i, j);
  }
  return out;
}

namespace {

// Bareiss elimination with full pivoting on an integer-exponent matrix.
// Returns the number of pivots; `last_pivot` receives the final pivot, which
// for a full-rank square input is the determinant (signs vanish mod 2).
std::size_t bareiss(ScalarMatrix a, NovikovScalar* last_pivot) {
  const std::size_t steps = std::min(a.rows(), a.cols());
  NovikovScalar previous = NovikovScalar::one();
  std::size_t rank = 0;
  for (std::size_t k = 0; k < steps; ++k) {
    std::optional<std::pair<std::size_t, std::size_t>> pivot;
    Rational best_span{0};
    for (std::size_t i = k; i < a.rows(); ++i) {
      for (std::size_t j = k; j < a.cols(); ++j) {
        const auto& e = a(i, j);
        if (e.is_zero()) continue;
        if (!pivot || e.degree_span() < best_span) {
          pivot = {i, j};
          best_span = e.degree_span();
        }
      }
    }
    if (!pivot) break;
    a.swap_rows(k, pivot->first);
    a.swap_cols(k, pivot->second);
    const NovikovScalar p = a(k, k);
    for (std::size_t i = k + 1; i < a.rows(); ++i) {
      const NovikovScalar lead = a(i, k);
      for (std::size_t j = k + 1; j < a.cols(); ++j) {
        NovikovScalar cross = p * a(i, j) + lead * a(k, j);
        a(i, j) = exact_quotient(cross, previous);
      }
      a(i, k) = NovikovScalar{};
    }
    previous = p;
    ++rank;
  }
  if (last_pivot) *last_pivot = previous;
  return rank;
}

}  // namespace

NovikovScalar determinant(const ScalarMatrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::DimensionMismatch, "determinant of non-square matrix");
  if (!m.has_integer_exponents()) {
    throw Error(ErrorKind::NonIntegerExponent, "determinant needs integer exponents");
  }
  NovikovScalar last;
  const std::size_t r = bareiss(m, &last);
  if (r < m.rows()) return {};
  return last;
}

std::size_t rank_over_fraction_field(const ScalarMatrix& m) {
  const std::int64_t scale = m.exponent_denominator_lcm();
  if (scale == 1) return bareiss(m, nullptr);
  return bareiss(m.rescaled_exponents(Rational{scale}), nullptr);
}

}  // namespace lagblow::algebra
