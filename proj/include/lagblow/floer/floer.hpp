#pragma once

#include "lagblow/algebra/scalar_matrix.hpp"
#include "lagblow/blowup/blowup.hpp"
#include "lagblow/model/model.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace lagblow::floer {

/// Ungraded Floer complex; exponents are strip areas divided by pi.
struct FloerComplex {
  std::vector<std::string> generators;
  algebra::ScalarMatrix differential;  // column p holds the boundary of p
};

struct FloerHomology {
  std::size_t generators = 0;
  std::size_t differential_rank = 0;
  std::size_t rank = 0;
};

/// d(p) = sum #M(p, q, A) T^{area(A)} q over index-1 strip classes, mod 2.
///
/// Counts in classes marked through x0 with index != 1 are blow-up marking
/// data and are skipped here. Throws Error(ValidationError) for unresolved
/// references or when neither N >= 3 nor Hamiltonian isotopy is asserted,
/// Error(BadIndex) for an unmarked class of index != 1, Error(InputError) for
/// a contributing strip of non-positive area, Error(NotAComplex) if d^2 != 0.
FloerComplex assemble_floer_complex(const model::FloerPairData& pair);

/// rank = #generators - 2 rank(d) over the fraction field.
FloerHomology floer_homology(const FloerComplex& complex);

/// Base index-1 strips persist; each marked class of index 2n-1 with a
/// nonzero count adds one term T^{area - rho^2} (class A - L_E, index 1).
/// Throws Error(NotAdmissible), Error(InputError) when a transformed area is
/// not positive, and Error(NotAComplex) when the result fails d^2 = 0.
FloerComplex blowup_floer_complex(const model::ManifoldData& manifold,
                                  const model::FloerPairData& pair,
                                  const blowup::BlowupParams& params);

}  // namespace lagblow::floer
