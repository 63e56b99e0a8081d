#pragma once

#include "lagblow/rational.hpp"
#include "lagblow/model/homology_result.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace lagblow::model {

struct ManifoldData {
  int half_dim = 2;         // n, so dim M = 2n
  Rational lambda_pi{1};    // lambda * pi
  bool width_asserted = false;  // c(M \ L) > 2(n-1)/lambda, asserted by the user

  bool operator==(const ManifoldData&) const = default;
};

/// Relative class in H_2(M, L) (or a strip class, where `maslov` is the
/// Maslov-Viterbo index). Areas are stored divided by pi.
struct DiskClass {
  std::string name;
  int maslov = 0;
  Rational area_over_pi{0};
  int exc_mult = 0;            // intersection with the exceptional divisor
  bool through_point = false;  // some representative passes through x0
  int point_multiplicity = 0;  // multiplicity at x0 of that representative

  bool operator==(const DiskClass&) const = default;
};

struct CriticalPoint {
  std::string name;
  int index = 0;

  bool operator==(const CriticalPoint&) const = default;
};

/// Count of trajectories (pearly, Morse, or Floer strips). An empty
/// class_name is the zero class. Counts are reduced mod 2 where used.
struct TrajectoryCount {
  std::string from;
  std::string to;
  std::string class_name;
  std::uint64_t count = 0;

  bool operator==(const TrajectoryCount&) const = default;
};

struct LagrangianData {
  std::string name;
  int dim = 2;
  std::vector<CriticalPoint> critical_points;
  std::vector<DiskClass> classes;
  std::vector<TrajectoryCount> morse_counts;
  std::vector<TrajectoryCount> quantum_counts;
  std::optional<std::vector<int>> betti_mod2;

  const CriticalPoint* find_point(const std::string& name) const;
  const DiskClass* find_class(const std::string& name) const;
  std::optional<std::size_t> point_position(const std::string& name) const;

  bool operator==(const LagrangianData&) const = default;
};

struct FloerPairData {
  std::string name;
  std::vector<std::string> intersection_points;
  std::vector<DiskClass> strip_classes;
  std::vector<TrajectoryCount> strip_counts;
  // Asserted minimal Maslov number of both Lagrangians in the base.
  int min_maslov_assertion = 0;
  bool hamiltonian_isotopic = false;

  const DiskClass* find_class(const std::string& name) const;
  std::optional<std::size_t> point_position(const std::string& name) const;

  bool operator==(const FloerPairData&) const = default;
};

struct ValidationReport {
  std::vector<std::string> violations;

  bool ok() const noexcept { return violations.empty(); }
};

/// Lists every class with maslov != lambda_pi * area_over_pi.
ValidationReport validate_monotone(const ManifoldData& manifold, const LagrangianData& lagrangian);

/// gcd of |maslov| over the classes. Throws Error(NoClasses) when the list is
/// empty or every index is zero.
int minimal_maslov(std::span<const DiskClass> classes);

/// ind(x) - ind(y) - 1 + mu(A); pass 0 for the zero class.
int pearl_dimension(const CriticalPoint& x, const CriticalPoint& y, int maslov);
int pearl_dimension(const CriticalPoint& x, const CriticalPoint& y, const DiskClass* cls);

/// Classical Morse homology over GF(2) from the zero-class counts. Throws
/// Error(DimensionMismatch) for a count between non-adjacent indices and
/// Error(NotAComplex) when the Morse differential does not square to zero.
HomologyResult morse_homology(const LagrangianData& lagrangian);

/// Structural checks: unique names, resolved references, index ranges,
/// base-manifold exceptional multiplicity, monotonicity, pearl dimensions of
/// contributing counts, and agreement of any supplied betti_mod2.
ValidationReport validate_lagrangian(const ManifoldData& manifold, const LagrangianData& lagrangian);

ValidationReport validate_floer_pair(const FloerPairData& pair);

}  // namespace lagblow::model
