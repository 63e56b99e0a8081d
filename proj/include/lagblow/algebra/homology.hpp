#pragma once

#include "lagblow/algebra/scalar_matrix.hpp"

#include <cstddef>
#include <vector>

namespace lagblow::algebra {

// Homology of   ... --d_in--> C --d_out--> ...   at C.
struct HomologyFragment {
  std::size_t ambient_rank = 0;
  std::size_t free_rank = 0;
  std::size_t rank_in = 0;
  std::size_t rank_out = 0;
  /// Non-unit invariant factors f of d_in; each contributes a summand Lambda/(f).
  /// Rational exponents are handled by rescaling to integers and back.
  std::vector<NovikovScalar> torsion;
};

/// d_in: rows = rank of C; d_out: cols = rank of C. An empty side is passed
/// as a matrix with zero columns (d_in) or zero rows (d_out). Throws
/// Error(DimensionMismatch) for incompatible shapes and Error(NotAComplex)
/// when d_out * d_in != 0.
HomologyFragment homology_decompose(const ScalarMatrix& d_in, const ScalarMatrix& d_out);

}  // namespace lagblow::algebra
