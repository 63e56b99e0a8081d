#include "lagblow/floer/floer.hpp"

#include "lagblow/error.hpp"

#include <set>
#include <tuple>

namespace lagblow::floer {

using algebra::NovikovScalar;
using algebra::ScalarMatrix;
using model::DiskClass;
using model::FloerPairData;

namespace {

void check_square_zero(const FloerComplex& c, const std::string& what) {
  const ScalarMatrix sq = c.differential * c.differential;
  if (!sq.is_zero()) {
    throw Error(ErrorKind::NotAComplex, what + " does not square to zero", {"d^2 = " + sq.to_string()});
  }
}

}  // namespace

FloerComplex assemble_floer_complex(const FloerPairData& pair) {
  const auto report = model::validate_floer_pair(pair);
  if (!report.ok()) {
    throw Error(ErrorKind::ValidationError, "floer pair " + pair.name + " is invalid",
                report.violations);
  }
  if (pair.min_maslov_assertion < 3 && !pair.hamiltonian_isotopic) {
    throw Error(ErrorKind::ValidationError,
                "floer pair " + pair.name +
                    ": d^2 = 0 needs minimal Maslov >= 3 or Hamiltonian-isotopic Lagrangians");
  }

  FloerComplex c;
  c.generators = pair.intersection_points;
  const std::size_t size = c.generators.size();
  c.differential = ScalarMatrix(size, size);
  for (const auto& tc : pair.strip_counts) {
    const DiskClass& cls = *pair.find_class(tc.class_name);
    if (cls.maslov != 1) {
      if (cls.through_point) continue;
      throw Error(ErrorKind::BadIndex, "strip count " + tc.from + " -> " + tc.to + " in " +
                                           cls.name + " has Maslov-Viterbo index " +
                                           std::to_string(cls.maslov));
    }
    if (cls.area_over_pi <= 0) {
      throw Error(ErrorKind::InputError, "strip class " + cls.name + " has non-positive area");
    }
    if (tc.count % 2 == 1) {
      c.differential(*pair.point_position(tc.to), *pair.point_position(tc.from)) +=
          NovikovScalar::monomial(cls.area_over_pi);
    }
  }
  check_square_zero(c, "Floer differential of " + pair.name);
  return c;
}

FloerHomology floer_homology(const FloerComplex& c) {
  FloerHomology h;
  h.generators = c.generators.size();
  h.differential_rank = algebra::rank_over_fraction_field(c.differential);
  h.rank = h.generators - 2 * h.differential_rank;
  return h;
}

FloerComplex blowup_floer_complex(const model::ManifoldData& manifold, const FloerPairData& pair,
                                  const blowup::BlowupParams& params) {
  const auto verdict = blowup::check_admissible_pair(manifold, pair);
  if (!verdict.admissible) {
    throw Error(ErrorKind::NotAdmissible, "floer pair " + pair.name + " is not admissible",
                verdict.diagnostics);
  }
  FloerComplex c = assemble_floer_complex(pair);

  const int marked_index = 2 * params.half_dim - 1;
  std::set<std::tuple<std::size_t, std::size_t, std::string>> seen;
  for (const auto& tc : pair.strip_counts) {
    const DiskClass& cls = *pair.find_class(tc.class_name);
    if (!cls.through_point || cls.maslov == 1 || tc.count == 0) continue;
    if (cls.maslov != marked_index) {
      throw Error(ErrorKind::BadIndex, "marked strip class " + cls.name + " has index " +
                                           std::to_string(cls.maslov) + ", expected 1 or " +
                                           std::to_string(marked_index));
    }
    const auto from = *pair.point_position(tc.from);
    const auto to = *pair.point_position(tc.to);
    if (!seen.insert({from, to, cls.name}).second) continue;
    const DiskClass lifted = blowup::proper_transform_class(cls, 1, params);
    if (lifted.area_over_pi <= 0) {
      throw Error(ErrorKind::InputError,
                  "transformed strip " + lifted.name + " has area " +
                      to_string(lifted.area_over_pi) + " <= 0",
                  {"a holomorphic strip has positive energy"});
    }
    c.differential(to, from) += NovikovScalar::monomial(lifted.area_over_pi);
  }
  check_square_zero(c, "blown-up Floer differential of " + pair.name);
  return c;
}

}  // namespace lagblow::floer
