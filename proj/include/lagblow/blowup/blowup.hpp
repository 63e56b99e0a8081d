#pragma once

#include "lagblow/model/model.hpp"

#include <span>
#include <string>
#include <vector>

namespace lagblow::blowup {

/// Monotone one-point blow-up data. The exceptional line L_E has Maslov
/// index 2(n-1) and area pi*rho^2; it is attached with exc_mult = -1.
struct BlowupParams {
  int half_dim = 2;
  Rational lambda_pi{1};
  Rational rho_sq{0};
  model::DiskClass exceptional_line;

  bool operator==(const BlowupParams&) const = default;
};

struct AdmissibilityVerdict {
  bool monotone_ok = false;
  bool same_lambda_ok = false;
  bool width_asserted = false;
  int min_maslov_blowup = 0;
  bool admissible = false;
  std::vector<std::string> diagnostics;
};

/// rho^2 = 2(n-1) / lambda_pi, the only weight keeping the blow-up monotone.
Rational monotone_weight(const model::ManifoldData& manifold);

BlowupParams make_params(const model::ManifoldData& manifold);

/// Class A - ell * L_E: Maslov index drops by 2(n-1)*ell and area by
/// ell*rho^2. The x0 mark survives only for ell == 0.
model::DiskClass proper_transform_class(const model::DiskClass& base, int ell,
                                        const BlowupParams& params);

/// gcd(N_L, 2(n-1)): blow-up classes are base classes plus multiples of L_E.
/// A Lagrangian without classes of nonzero index gets 2(n-1).
int blowup_min_maslov(const model::LagrangianData& lagrangian, const BlowupParams& params);

AdmissibilityVerdict check_admissible(const model::ManifoldData& manifold,
                                      std::span<const model::LagrangianData> lagrangians);

/// Pair-level verdict for Floer data, which carries an asserted minimal
/// Maslov number instead of class lists for the two Lagrangians.
AdmissibilityVerdict check_admissible_pair(const model::ManifoldData& manifold,
                                           const model::FloerPairData& pair);

}  // namespace lagblow::blowup
