#include "lagblow/model/model.hpp"

#include "lagblow/algebra/homology.hpp"
#include "lagblow/error.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace lagblow {

std::string_view to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::Wide: return "wide";
    case Verdict::Narrow: return "narrow";
    case Verdict::Other: return "other";
    case Verdict::Unclassified: return "unclassified";
  }
  return "unclassified";
}

std::vector<std::size_t> HomologyResult::free_ranks() const {
  std::vector<std::size_t> out;
  out.reserve(degrees.size());
  for (const auto& d : degrees) out.push_back(d.free_rank);
  return out;
}

bool HomologyResult::has_torsion() const {
  return std::any_of(degrees.begin(), degrees.end(),
                     [](const DegreeHomology& d) { return !d.torsion.empty(); });
}

std::size_t HomologyResult::total_rank() const {
  std::size_t total = 0;
  for (const auto& d : degrees) total += d.free_rank;
  return total;
}

}  // namespace lagblow

namespace lagblow::model {

using algebra::NovikovScalar;
using algebra::ScalarMatrix;

const CriticalPoint* LagrangianData::find_point(const std::string& point) const {
  auto it = std::find_if(critical_points.begin(), critical_points.end(),
                         [&](const CriticalPoint& p) { return p.name == point; });
  return it == critical_points.end() ? nullptr : &*it;
}

const DiskClass* LagrangianData::find_class(const std::string& cls) const {
  auto it = std::find_if(classes.begin(), classes.end(),
                         [&](const DiskClass& c) { return c.name == cls; });
  return it == classes.end() ? nullptr : &*it;
}

std::optional<std::size_t> LagrangianData::point_position(const std::string& point) const {
  for (std::size_t i = 0; i < critical_points.size(); ++i) {
    if (critical_points[i].name == point) return i;
  }
  return std::nullopt;
}

const DiskClass* FloerPairData::find_class(const std::string& cls) const {
  auto it = std::find_if(strip_classes.begin(), strip_classes.end(),
                         [&](const DiskClass& c) { return c.name == cls; });
  return it == strip_classes.end() ? nullptr : &*it;
}

std::optional<std::size_t> FloerPairData::point_position(const std::string& point) const {
  for (std::size_t i = 0; i < intersection_points.size(); ++i) {
    if (intersection_points[i] == point) return i;
  }
  return std::nullopt;
}

ValidationReport validate_monotone(const ManifoldData& manifold, const LagrangianData& lagrangian) {
  ValidationReport report;
  for (const auto& c : lagrangian.classes) {
    const Rational expected = manifold.lambda_pi * c.area_over_pi;
    if (Rational{c.maslov} != expected) {
      report.violations.push_back("class " + c.name + ": maslov " + std::to_string(c.maslov) +
                                  " != lambda_pi * area_over_pi = " + to_string(expected));
    }
  }
  return report;
}

int minimal_maslov(std::span<const DiskClass> classes) {
  int g = 0;
  for (const auto& c : classes) g = std::gcd(g, std::abs(c.maslov));
  if (g == 0) {
    throw Error(ErrorKind::NoClasses, "minimal Maslov number needs a class of nonzero Maslov index");
  }
  return g;
}

int pearl_dimension(const CriticalPoint& x, const CriticalPoint& y, int maslov) {
  return x.index - y.index - 1 + maslov;
}

int pearl_dimension(const CriticalPoint& x, const CriticalPoint& y, const DiskClass* cls) {
  return pearl_dimension(x, y, cls ? cls->maslov : 0);
}

namespace {

int top_degree(const LagrangianData& l) {
  int top = l.dim;
  for (const auto& p : l.critical_points) top = std::max(top, p.index);
  return top;
}

std::vector<std::size_t> points_of_index(const LagrangianData& l, int index) {
  std::vector<std::size_t> ids;
  for (std::size_t i = 0; i < l.critical_points.size(); ++i) {
    if (l.critical_points[i].index == index) ids.push_back(i);
  }
  return ids;
}

}  // namespace

HomologyResult morse_homology(const LagrangianData& lagrangian) {
  const std::size_t size = lagrangian.critical_points.size();
  ScalarMatrix d(size, size);
  for (const auto& tc : lagrangian.morse_counts) {
    const auto from = lagrangian.point_position(tc.from);
    const auto to = lagrangian.point_position(tc.to);
    if (!from || !to) {
      throw Error(ErrorKind::ValidationError,
                  "Morse count references unknown point " + (from ? tc.to : tc.from));
    }
    const auto& x = lagrangian.critical_points[*from];
    const auto& y = lagrangian.critical_points[*to];
    if (pearl_dimension(x, y, 0) != 0) {
      throw Error(ErrorKind::DimensionMismatch,
                  "Morse count " + x.name + " -> " + y.name + " joins indices " +
                      std::to_string(x.index) + " and " + std::to_string(y.index));
    }
    if (tc.count % 2 == 1) d(*to, *from) += NovikovScalar::one();
  }

  HomologyResult result;
  const int top = top_degree(lagrangian);
  for (int k = 0; k <= top; ++k) {
    const auto here = points_of_index(lagrangian, k);
    const auto above = points_of_index(lagrangian, k + 1);
    const auto below = points_of_index(lagrangian, k - 1);
    const auto frag = algebra::homology_decompose(d.select(here, above), d.select(below, here));
    result.degrees.push_back(DegreeHomology{k, frag.free_rank, frag.torsion});
  }
  return result;
}

ValidationReport validate_lagrangian(const ManifoldData& manifold, const LagrangianData& l) {
  ValidationReport report;
  auto& v = report.violations;
  const std::string where = "lagrangian " + l.name + ": ";

  if (manifold.half_dim < 2) v.push_back("manifold: n must be at least 2");
  if (manifold.lambda_pi <= 0) v.push_back("manifold: lambda_pi must be positive");
  if (l.dim != manifold.half_dim) {
    v.push_back(where + "dim " + std::to_string(l.dim) + " differs from n = " +
                std::to_string(manifold.half_dim));
  }

  std::set<std::string> seen;
  for (const auto& p : l.critical_points) {
    if (p.name.empty()) v.push_back(where + "critical point with empty name");
    if (!seen.insert(p.name).second) v.push_back(where + "duplicate critical point " + p.name);
    if (p.index < 0 || p.index > l.dim) {
      v.push_back(where + "critical point " + p.name + " has index " + std::to_string(p.index) +
                  " outside [0, " + std::to_string(l.dim) + "]");
    }
  }
  seen.clear();
  for (const auto& c : l.classes) {
    if (c.name.empty()) v.push_back(where + "class with empty name");
    if (!seen.insert(c.name).second) v.push_back(where + "duplicate class " + c.name);
    if (c.exc_mult != 0) {
      v.push_back(where + "class " + c.name + " has exc_mult " + std::to_string(c.exc_mult) +
                  " on the base manifold");
    }
    if (c.through_point && c.point_multiplicity < 1) {
      v.push_back(where + "class " + c.name + " is marked through x0 with multiplicity < 1");
    }
    if (!c.through_point && c.point_multiplicity != 0) {
      v.push_back(where + "class " + c.name + " has a point multiplicity but no x0 mark");
    }
  }
  for (auto& m : validate_monotone(manifold, l).violations) v.push_back(where + m);

  for (const auto& tc : l.morse_counts) {
    const auto* x = l.find_point(tc.from);
    const auto* y = l.find_point(tc.to);
    if (!x) v.push_back(where + "Morse count references undeclared point " + tc.from);
    if (!y) v.push_back(where + "Morse count references undeclared point " + tc.to);
    if (!tc.class_name.empty()) {
      v.push_back(where + "Morse count " + tc.from + " -> " + tc.to + " carries class " +
                  tc.class_name);
    }
    if (x && y && pearl_dimension(*x, *y, 0) != 0) {
      v.push_back(where + "Morse count " + tc.from + " -> " + tc.to + " has dimension " +
                  std::to_string(pearl_dimension(*x, *y, 0)) + " != 0");
    }
  }
  for (const auto& tc : l.quantum_counts) {
    const auto* x = l.find_point(tc.from);
    const auto* y = l.find_point(tc.to);
    const auto* c = l.find_class(tc.class_name);
    if (!x) v.push_back(where + "quantum count references undeclared point " + tc.from);
    if (!y) v.push_back(where + "quantum count references undeclared point " + tc.to);
    if (!c) v.push_back(where + "quantum count references undeclared class " + tc.class_name);
    if (!x || !y || !c) continue;
    const int delta = pearl_dimension(*x, *y, c);
    const bool marking = c->maslov == 2 * manifold.half_dim && c->through_point;
    if (delta != 0 && !marking) {
      v.push_back(where + "quantum count " + tc.from + " -> " + tc.to + " in " + c->name +
                  " has dimension " + std::to_string(delta) + " != 0");
    }
  }

  if (l.betti_mod2 && v.empty()) {
    try {
      const auto computed = morse_homology(l).free_ranks();
      std::vector<std::size_t> supplied(l.betti_mod2->begin(), l.betti_mod2->end());
      supplied.resize(std::max(supplied.size(), computed.size()), 0);
      auto padded = computed;
      padded.resize(supplied.size(), 0);
      if (supplied != padded) {
        std::ostringstream msg;
        msg << where << "betti_mod2 disagrees with Morse homology (";
        for (std::size_t i = 0; i < padded.size(); ++i) msg << (i ? "," : "") << padded[i];
        msg << ")";
        v.push_back(msg.str());
      }
    } catch (const Error& e) {
      v.push_back(where + "Morse homology unavailable: " + e.what());
    }
  }
  return report;
}

ValidationReport validate_floer_pair(const FloerPairData& pair) {
  ValidationReport report;
  auto& v = report.violations;
  const std::string where = "floer pair " + pair.name + ": ";
  std::set<std::string> seen;
  for (const auto& p : pair.intersection_points) {
    if (!seen.insert(p).second) v.push_back(where + "duplicate intersection point " + p);
  }
  seen.clear();
  for (const auto& c : pair.strip_classes) {
    if (!seen.insert(c.name).second) v.push_back(where + "duplicate strip class " + c.name);
    if (c.exc_mult != 0) v.push_back(where + "strip class " + c.name + " has nonzero exc_mult");
  }
  for (const auto& tc : pair.strip_counts) {
    if (!pair.point_position(tc.from)) v.push_back(where + "strip count references undeclared point " + tc.from);
    if (!pair.point_position(tc.to)) v.push_back(where + "strip count references undeclared point " + tc.to);
    if (!pair.find_class(tc.class_name)) {
      v.push_back(where + "strip count references undeclared class " + tc.class_name);
    }
  }
  if (pair.min_maslov_assertion < 2) {
    v.push_back(where + "min_maslov_assertion must be at least 2");
  }
  return report;
}

}  // namespace lagblow::model
