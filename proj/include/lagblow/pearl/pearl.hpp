#pragma once

#include "lagblow/algebra/scalar_matrix.hpp"
#include "lagblow/blowup/blowup.hpp"
#include "lagblow/model/homology_result.hpp"
#include "lagblow/model/model.hpp"

#include <string>
#include <vector>

namespace lagblow::pearl {

struct Generator {
  std::string name;
  int degree = 0;

  bool operator==(const Generator&) const = default;
};

/// Pearl complex over Lambda = GF(2)[t, 1/t] with deg t = -N.
/// Column j of `differential` is the image of generator j.
struct ChainComplex {
  std::vector<Generator> generators;
  int ring_min_maslov = 0;  // N; 0 when no class carries Maslov index
  algebra::ScalarMatrix differential;
};

/// Throws Error(BadExponent) if some entry is not of pure degree -1 and
/// Error(NotAComplex) if the differential does not square to zero.
void check_chain_complex(const ChainComplex& complex);

/// d(x) = sum over delta(x, y, A) = 0 of #P(x, y, A) t^{mu(A)/N} y, mod 2.
///
/// Quantum counts of dimension != 0 are accepted only for classes of Maslov
/// index 2n marked through x0; they record where the blow-up point lies and
/// do not enter the base differential.
ChainComplex assemble_pearl_complex(const model::ManifoldData& manifold,
                                    const model::LagrangianData& lagrangian);

/// Free ranks per Morse degree plus torsion. Homology is taken per residue of
/// the degree mod N (the graded pieces of the Lambda-module); within a residue
/// a class is attributed to the lowest Morse degree whose span contains a
/// representing cycle.
HomologyResult quantum_homology(const ChainComplex& complex, const std::vector<int>& reference_betti);

/// Narrow if everything vanishes, wide if free ranks equal the reference Betti
/// numbers without torsion, other otherwise.
Verdict classify_wideness(const HomologyResult& homology);

/// Morse homology ranks of the same Lagrangian, the default wideness reference.
std::vector<int> default_reference_betti(const model::LagrangianData& lagrangian);

struct BlowupCorrection {
  std::string from;
  std::string to;
  std::vector<std::string> classes;  // Maslov-2n classes through x0 with nonempty P(from, to, A)
  int k = 0;                         // number of such classes

  int parity() const noexcept { return k % 2; }
  bool operator==(const BlowupCorrection&) const = default;
};

struct BlowupPearlResult {
  ChainComplex complex;
  std::vector<BlowupCorrection> corrections;
  std::vector<model::DiskClass> new_classes;  // the transformed A - L_E classes
};

/// Pearl complex of the proper transform in the monotone one-point blow-up of
/// a four-manifold. Base contributions keep their class (ell = 0) and move to
/// exponent mu/N~; for each pair with ind(p) - ind(q) - 1 = -2, every marked
/// Maslov-4 class adds one term in class A - L_E.
///
/// Throws Error(NotDimensionFour), Error(NotAdmissible), Error(InputError)
/// for a marked class of multiplicity >= 2 at x0, and the assembly errors.
BlowupPearlResult blowup_pearl_complex(const model::ManifoldData& manifold,
                                       const model::LagrangianData& lagrangian,
                                       const blowup::BlowupParams& params);

}  // namespace lagblow::pearl
