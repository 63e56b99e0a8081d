#include "lagblow/pearl/pearl.hpp"

#include "lagblow/algebra/homology.hpp"
#include "lagblow/error.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace lagblow::pearl {

using algebra::NovikovScalar;
using algebra::ScalarMatrix;
using model::CriticalPoint;
using model::DiskClass;
using model::LagrangianData;

void check_chain_complex(const ChainComplex& c) {
  const std::size_t size = c.generators.size();
  if (c.differential.rows() != size || c.differential.cols() != size) {
    throw Error(ErrorKind::DimensionMismatch, "differential shape does not match generator count");
  }
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = 0; j < size; ++j) {
      for (const auto& e : c.differential(i, j).exponents()) {
        const Rational lhs = Rational{c.generators[i].degree} - e * c.ring_min_maslov;
        if (lhs != c.generators[j].degree - 1) {
          throw Error(ErrorKind::BadExponent,
                      "term t^" + to_string(e) + " from " + c.generators[j].name + " to " +
                          c.generators[i].name + " is not of degree -1");
        }
      }
    }
  }
  if (!(c.differential * c.differential).is_zero()) {
    throw Error(ErrorKind::NotAComplex, "pearl differential does not square to zero",
                {"d^2 = " + (c.differential * c.differential).to_string()});
  }
}

namespace {

void require_valid(const model::ManifoldData& manifold, const LagrangianData& l) {
  const auto report = model::validate_monotone(manifold, l);
  if (!report.ok()) {
    throw Error(ErrorKind::ValidationError, "lagrangian " + l.name + " is not monotone",
                report.violations);
  }
  std::vector<std::string> dangling;
  auto check_points = [&](const model::TrajectoryCount& tc) {
    if (!l.find_point(tc.from)) dangling.push_back("undeclared point " + tc.from);
    if (!l.find_point(tc.to)) dangling.push_back("undeclared point " + tc.to);
  };
  for (const auto& tc : l.morse_counts) check_points(tc);
  for (const auto& tc : l.quantum_counts) {
    check_points(tc);
    if (!l.find_class(tc.class_name)) dangling.push_back("undeclared class " + tc.class_name);
  }
  if (!dangling.empty()) {
    throw Error(ErrorKind::ValidationError, "lagrangian " + l.name + " has dangling references",
                dangling);
  }
}

int ring_grading(const LagrangianData& l) {
  const bool any = std::any_of(l.classes.begin(), l.classes.end(),
                               [](const DiskClass& c) { return c.maslov != 0; });
  return any ? model::minimal_maslov(l.classes) : 0;
}

Rational exponent_for(const DiskClass& cls, int ring_n) {
  if (cls.maslov == 0) return Rational{0};
  if (ring_n == 0 || cls.maslov % ring_n != 0) {
    throw Error(ErrorKind::BadExponent, "Maslov index " + std::to_string(cls.maslov) + " of " +
                                            cls.name + " is not a multiple of N = " +
                                            std::to_string(ring_n));
  }
  return Rational{cls.maslov / ring_n};
}

bool is_marking(const DiskClass& cls, const model::ManifoldData& manifold) {
  return cls.through_point && cls.maslov == 2 * manifold.half_dim;
}

std::vector<Generator> generators_of(const LagrangianData& l) {
  std::vector<Generator> gens;
  gens.reserve(l.critical_points.size());
  for (const auto& p : l.critical_points) gens.push_back(Generator{p.name, p.index});
  return gens;
}

// Morse part plus every dimension-zero quantum count, with exponents mu/ring_n.
// Each class passes through `transform` first (identity on the base).
template <typename Transform>
ScalarMatrix base_differential(const model::ManifoldData& manifold, const LagrangianData& l,
                               int ring_n, Transform transform) {
  const std::size_t size = l.critical_points.size();
  ScalarMatrix d(size, size);
  for (const auto& tc : l.morse_counts) {
    const auto from = *l.point_position(tc.from);
    const auto to = *l.point_position(tc.to);
    if (model::pearl_dimension(l.critical_points[from], l.critical_points[to], 0) != 0) {
      throw Error(ErrorKind::DimensionMismatch,
                  "Morse count " + tc.from + " -> " + tc.to + " has nonzero dimension");
    }
    if (tc.count % 2 == 1) d(to, from) += NovikovScalar::one();
  }
  for (const auto& tc : l.quantum_counts) {
    const auto from = *l.point_position(tc.from);
    const auto to = *l.point_position(tc.to);
    const DiskClass& cls = *l.find_class(tc.class_name);
    const int delta = model::pearl_dimension(l.critical_points[from], l.critical_points[to], &cls);
    if (delta != 0) {
      if (is_marking(cls, manifold)) continue;
      throw Error(ErrorKind::DimensionMismatch, "quantum count " + tc.from + " -> " + tc.to +
                                                    " in " + cls.name + " has dimension " +
                                                    std::to_string(delta));
    }
    const Rational e = exponent_for(transform(cls), ring_n);
    if (tc.count % 2 == 1) d(to, from) += NovikovScalar::monomial(e);
  }
  return d;
}

int degree_key(int degree, int ring_n) {
  if (ring_n == 0) return degree;
  return ((degree % ring_n) + ring_n) % ring_n;
}

}  // namespace

ChainComplex assemble_pearl_complex(const model::ManifoldData& manifold, const LagrangianData& l) {
  require_valid(manifold, l);
  ChainComplex c;
  c.generators = generators_of(l);
  c.ring_min_maslov = ring_grading(l);
  c.differential = base_differential(manifold, l, c.ring_min_maslov,
                                     [](const DiskClass& cls) -> const DiskClass& { return cls; });
  check_chain_complex(c);
  return c;
}

HomologyResult quantum_homology(const ChainComplex& c, const std::vector<int>& reference_betti) {
  check_chain_complex(c);
  const int ring_n = c.ring_min_maslov;

  int lo = 0;
  int hi = static_cast<int>(reference_betti.size()) - 1;
  std::map<int, std::vector<std::size_t>> by_key;
  for (std::size_t i = 0; i < c.generators.size(); ++i) {
    const int deg = c.generators[i].degree;
    lo = std::min(lo, deg);
    hi = std::max(hi, deg);
    by_key[degree_key(deg, ring_n)].push_back(i);
  }

  HomologyResult result;
  result.reference_betti = reference_betti;
  for (int k = lo; k <= hi; ++k) result.degrees.push_back(DegreeHomology{k, 0, {}});
  auto slot = [&](int degree) -> DegreeHomology& { return result.degrees[degree - lo]; };

  auto members = [&](int key) {
    auto it = by_key.find(key);
    return it == by_key.end() ? std::vector<std::size_t>{} : it->second;
  };

  for (const auto& [key, here] : by_key) {
    const int up_key = ring_n == 0 ? key + 1 : degree_key(key + 1, ring_n);
    const int down_key = ring_n == 0 ? key - 1 : degree_key(key - 1, ring_n);
    const auto above = members(up_key);
    const auto below = members(down_key);
    const ScalarMatrix d_in = c.differential.select(here, above);
    const ScalarMatrix d_out = c.differential.select(below, here);
    const auto frag = algebra::homology_decompose(d_in, d_out);

    // Filter the residue's homology by Morse degree: F_p = classes with a
    // representing cycle supported on generators of degree <= p.
    std::set<int> degrees;
    for (auto i : here) degrees.insert(c.generators[i].degree);
    const std::size_t rank_in = frag.rank_in;
    std::size_t previous = 0;
    std::size_t attributed = 0;
    std::vector<std::size_t> all_below(below.size());
    std::vector<std::size_t> all_above(above.size());
    for (std::size_t i = 0; i < below.size(); ++i) all_below[i] = i;
    for (std::size_t i = 0; i < above.size(); ++i) all_above[i] = i;
    for (int p : degrees) {
      std::vector<std::size_t> inside;
      std::vector<std::size_t> outside;
      for (std::size_t local = 0; local < here.size(); ++local) {
        (c.generators[here[local]].degree <= p ? inside : outside).push_back(local);
      }
      const std::size_t cycles =
          inside.size() - algebra::rank_over_fraction_field(d_out.select(all_below, inside));
      const std::size_t boundaries =
          rank_in - algebra::rank_over_fraction_field(d_in.select(outside, all_above));
      const std::size_t filtered = cycles - boundaries;
      slot(p).free_rank = filtered - previous;
      attributed += filtered - previous;
      previous = filtered;
    }
    if (attributed != frag.free_rank) {
      throw std::logic_error("degree filtration does not exhaust the homology of residue " +
                             std::to_string(key));
    }
    if (!frag.torsion.empty()) {
      auto& target = slot(*degrees.begin()).torsion;
      target.insert(target.end(), frag.torsion.begin(), frag.torsion.end());
    }
  }
  result.verdict = classify_wideness(result);
  return result;
}

Verdict classify_wideness(const HomologyResult& h) {
  if (h.has_torsion()) return Verdict::Other;
  if (h.total_rank() == 0) return Verdict::Narrow;
  std::map<int, std::size_t> ranks;
  for (const auto& d : h.degrees) ranks[d.degree] = d.free_rank;
  for (std::size_t k = 0; k < h.reference_betti.size(); ++k) {
    const int deg = static_cast<int>(k);
    const std::size_t have = ranks.count(deg) ? ranks[deg] : 0;
    if (have != static_cast<std::size_t>(h.reference_betti[k])) return Verdict::Other;
    ranks.erase(deg);
  }
  for (const auto& [deg, rank] : ranks) {
    if (rank != 0) return Verdict::Other;
  }
  return Verdict::Wide;
}

std::vector<int> default_reference_betti(const LagrangianData& l) {
  std::vector<int> out;
  for (auto r : model::morse_homology(l).free_ranks()) out.push_back(static_cast<int>(r));
  return out;
}

BlowupPearlResult blowup_pearl_complex(const model::ManifoldData& manifold, const LagrangianData& l,
                                       const blowup::BlowupParams& params) {
  if (manifold.half_dim != 2) {
    throw Error(ErrorKind::NotDimensionFour,
                "the blow-up differential transform is implemented for dim M = 4 only, got n = " +
                    std::to_string(manifold.half_dim));
  }
  const auto verdict = blowup::check_admissible(manifold, std::span(&l, 1));
  if (!verdict.admissible) {
    throw Error(ErrorKind::NotAdmissible, "lagrangian " + l.name + " is not admissible",
                verdict.diagnostics);
  }
  assemble_pearl_complex(manifold, l);  // base data must already form a complex

  BlowupPearlResult out;
  ChainComplex& c = out.complex;
  c.generators = generators_of(l);
  c.ring_min_maslov = blowup::blowup_min_maslov(l, params);
  c.differential = base_differential(manifold, l, c.ring_min_maslov, [&](const DiskClass& cls) {
    return blowup::proper_transform_class(cls, 0, params);
  });

  // Marked Maslov-2n classes per (from, to), in class declaration order.
  std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>> marked;
  for (const auto& tc : l.quantum_counts) {
    const DiskClass& cls = *l.find_class(tc.class_name);
    if (!is_marking(cls, manifold) || tc.count == 0) continue;
    const auto from = *l.point_position(tc.from);
    const auto to = *l.point_position(tc.to);
    if (l.critical_points[from].index - l.critical_points[to].index - 1 != -2) continue;
    if (cls.point_multiplicity >= 2) {
      throw Error(ErrorKind::InputError,
                  "class " + cls.name + " meets x0 with multiplicity " +
                      std::to_string(cls.point_multiplicity),
                  {"only multiplicities 0 and 1 at the blown-up point are supported"});
    }
    auto& ids = marked[{from, to}];
    const auto pos = static_cast<std::size_t>(&cls - l.classes.data());
    if (std::find(ids.begin(), ids.end(), pos) == ids.end()) ids.push_back(pos);
  }

  for (auto& [key, ids] : marked) {
    std::sort(ids.begin(), ids.end());
    BlowupCorrection corr;
    corr.from = l.critical_points[key.first].name;
    corr.to = l.critical_points[key.second].name;
    for (auto id : ids) {
      const DiskClass lifted = blowup::proper_transform_class(l.classes[id], 1, params);
      if (Rational{lifted.maslov} != params.lambda_pi * lifted.area_over_pi) {
        throw std::logic_error("proper transform broke monotonicity for " + lifted.name);
      }
      c.differential(key.second, key.first) +=
          NovikovScalar::monomial(exponent_for(lifted, c.ring_min_maslov));
      corr.classes.push_back(l.classes[id].name);
      out.new_classes.push_back(lifted);
    }
    corr.k = static_cast<int>(corr.classes.size());
    out.corrections.push_back(std::move(corr));
  }

  check_chain_complex(c);
  return out;
}

}  // namespace lagblow::pearl
