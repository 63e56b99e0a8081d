#pragma once

#include "lagblow/algebra/scalar_matrix.hpp"

#include <vector>

namespace lagblow::algebra {

struct SNFResult {
  ScalarMatrix D;
  ScalarMatrix U;
  ScalarMatrix V;
  /// Nonzero diagonal entries of D, lowest exponent normalized to 0, in order.
  std::vector<NovikovScalar> divisors;

  std::size_t rank() const noexcept { return divisors.size(); }
};

/// Smith normal form over the PID GF(2)[t, 1/t]: U * M * V == D with U, V
/// invertible and d_1 | d_2 | ... on the diagonal.
///
/// Pivot choice is the entry of least degree span in the active block, ties
/// broken row-major. Throws Error(NonIntegerExponent) if any entry has a
/// non-integer exponent.
SNFResult smith_normal_form(const ScalarMatrix& m);

}  // namespace lagblow::algebra
