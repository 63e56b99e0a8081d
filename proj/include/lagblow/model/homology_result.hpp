#pragma once

#include "lagblow/algebra/novikov.hpp"

#include <cstddef>
#include <string_view>
#include <vector>

namespace lagblow {

enum class Verdict { Wide, Narrow, Other, Unclassified };

std::string_view to_string(Verdict verdict);

struct DegreeHomology {
  int degree = 0;
  std::size_t free_rank = 0;
  std::vector<algebra::NovikovScalar> torsion;

  bool operator==(const DegreeHomology&) const = default;
};

struct HomologyResult {
  std::vector<DegreeHomology> degrees;  // ascending degree
  std::vector<int> reference_betti;     // index = degree
  Verdict verdict = Verdict::Unclassified;

  std::vector<std::size_t> free_ranks() const;
  bool has_torsion() const;
  std::size_t total_rank() const;
};

}  // namespace lagblow
