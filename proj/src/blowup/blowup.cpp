#include "lagblow/blowup/blowup.hpp"

#include "lagblow/error.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <optional>

namespace lagblow::blowup {

using model::DiskClass;

Rational monotone_weight(const model::ManifoldData& manifold) {
  if (manifold.half_dim < 2 || manifold.lambda_pi <= 0) {
    throw Error(ErrorKind::InputError, "monotone weight needs n >= 2 and lambda_pi > 0");
  }
  return Rational{2 * (manifold.half_dim - 1)} / manifold.lambda_pi;
}

BlowupParams make_params(const model::ManifoldData& manifold) {
  BlowupParams p;
  p.half_dim = manifold.half_dim;
  p.lambda_pi = manifold.lambda_pi;
  p.rho_sq = monotone_weight(manifold);
  p.exceptional_line = DiskClass{"L_E", 2 * (manifold.half_dim - 1), p.rho_sq, -1, false, 0};
  return p;
}

namespace {

std::string transformed_name(const std::string& base, int ell) {
  if (ell == 0) return "~" + base;
  if (ell == 1) return "~" + base + "-L_E";
  return "~" + base + "-" + std::to_string(ell) + "L_E";
}

}  // namespace

DiskClass proper_transform_class(const DiskClass& base, int ell, const BlowupParams& params) {
  if (ell < 0) {
    throw Error(ErrorKind::NegativeMultiplicity,
                "exceptional multiplicity " + std::to_string(ell) + " < 0 for class " + base.name);
  }
  if (base.exc_mult != 0) {
    throw Error(ErrorKind::InputError, "class " + base.name + " is not a base-manifold class");
  }
  DiskClass out = base;
  out.name = transformed_name(base.name, ell);
  out.maslov = base.maslov - 2 * (params.half_dim - 1) * ell;
  out.area_over_pi = base.area_over_pi - Rational{ell} * params.rho_sq;
  out.exc_mult = ell;
  if (ell > 0) {
    out.through_point = false;
    out.point_multiplicity = 0;
  }
  return out;
}

int blowup_min_maslov(const model::LagrangianData& lagrangian, const BlowupParams& params) {
  // With no class of nonzero index the base image is {0}, so only L_E generates.
  int base = 0;
  for (const auto& c : lagrangian.classes) base = std::gcd(base, std::abs(c.maslov));
  return std::gcd(base, 2 * (params.half_dim - 1));
}

namespace {

// lambda_pi implied by the classes of nonzero area, if they agree on one.
std::optional<Rational> implied_lambda(const model::LagrangianData& l, bool& consistent) {
  std::optional<Rational> lambda;
  consistent = true;
  for (const auto& c : l.classes) {
    if (c.area_over_pi == 0) continue;
    const Rational ratio = Rational{c.maslov} / c.area_over_pi;
    if (lambda && *lambda != ratio) consistent = false;
    if (!lambda) lambda = ratio;
  }
  return lambda;
}

void finish(AdmissibilityVerdict& v) {
  if (!v.width_asserted) {
    v.diagnostics.push_back("Gromov width condition c(M \\ L) > 2(n-1)/lambda not asserted");
  }
  if (v.min_maslov_blowup < 2) {
    v.diagnostics.push_back("minimal Maslov in blow-up = " + std::to_string(v.min_maslov_blowup) +
                            " < 2");
  }
  v.admissible = v.monotone_ok && v.same_lambda_ok && v.width_asserted && v.min_maslov_blowup >= 2;
}

}  // namespace

AdmissibilityVerdict check_admissible(const model::ManifoldData& manifold,
                                      std::span<const model::LagrangianData> lagrangians) {
  AdmissibilityVerdict v;
  v.width_asserted = manifold.width_asserted;
  v.monotone_ok = true;
  v.same_lambda_ok = true;

  if (lagrangians.empty()) v.diagnostics.push_back("no Lagrangians to check");

  const BlowupParams params = make_params(manifold);
  std::optional<int> min_blowup;
  for (const auto& l : lagrangians) {
    const auto report = model::validate_monotone(manifold, l);
    if (!report.ok()) {
      v.monotone_ok = false;
      for (const auto& m : report.violations) v.diagnostics.push_back(l.name + ": " + m);
    }
    bool consistent = true;
    const auto lambda = implied_lambda(l, consistent);
    if (!consistent || (lambda && *lambda != manifold.lambda_pi)) {
      v.same_lambda_ok = false;
      v.diagnostics.push_back(l.name + ": monotonicity constant differs from lambda_pi = " +
                              to_string(manifold.lambda_pi));
    }
    const int m = blowup_min_maslov(l, params);
    min_blowup = min_blowup ? std::min(*min_blowup, m) : m;
  }
  v.min_maslov_blowup = min_blowup.value_or(0);
  finish(v);
  return v;
}

AdmissibilityVerdict check_admissible_pair(const model::ManifoldData& manifold,
                                           const model::FloerPairData& pair) {
  AdmissibilityVerdict v;
  v.width_asserted = manifold.width_asserted;
  // Both Lagrangians share the ambient lambda by construction of the pair data.
  v.monotone_ok = true;
  v.same_lambda_ok = true;
  if (pair.min_maslov_assertion <= 0) {
    v.diagnostics.push_back(pair.name + ": no minimal Maslov assertion");
    v.min_maslov_blowup = 0;
  } else {
    v.min_maslov_blowup = std::gcd(pair.min_maslov_assertion, 2 * (manifold.half_dim - 1));
  }
  finish(v);
  return v;
}

}  // namespace lagblow::blowup
