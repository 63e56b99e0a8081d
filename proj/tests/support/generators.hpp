#pragma once

// Hand-rolled random generators for property tests. Every generator takes
// the engine explicitly so failures reproduce from the seed alone.

#include "lagblow/algebra/scalar_matrix.hpp"
#include "lagblow/error.hpp"
#include "lagblow/model/model.hpp"
#include "lagblow/pearl/pearl.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace lagblow::testing {

using Engine = std::mt19937_64;

inline int uniform(Engine& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline bool coin(Engine& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

// Laurent polynomial with exponents in [lo, hi], each present with probability p.
inline algebra::NovikovScalar random_scalar(Engine& rng, int lo = -2, int hi = 2, double p = 0.35) {
  std::vector<Rational> e;
  for (int k = lo; k <= hi; ++k) {
    if (coin(rng, p)) e.emplace_back(k);
  }
  return algebra::NovikovScalar::from_exponents(std::move(e));
}

inline algebra::NovikovScalar random_nonzero_scalar(Engine& rng, int lo = -2, int hi = 2) {
  for (;;) {
    auto s = random_scalar(rng, lo, hi);
    if (!s.is_zero()) return s;
  }
}

inline algebra::ScalarMatrix random_matrix(Engine& rng, std::size_t rows, std::size_t cols,
                                           double density = 0.6) {
  algebra::ScalarMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (coin(rng, density)) m(r, c) = random_scalar(rng);
    }
  }
  return m;
}

// Random matrix of prescribed fraction-field rank: a product of a rows x r
// and an r x cols factor plus nothing else (rank can only drop, so the
// caller compares against the oracle, not against r).
inline algebra::ScalarMatrix random_low_rank(Engine& rng, std::size_t rows, std::size_t cols,
                                             std::size_t r) {
  return random_matrix(rng, rows, r, 0.7) * random_matrix(rng, r, cols, 0.7);
}

// Invertible matrix P and its inverse, built from elementary row additions.
struct Unimodular {
  algebra::ScalarMatrix forward;
  algebra::ScalarMatrix inverse;
};

inline Unimodular random_unimodular(Engine& rng, std::size_t n, int steps) {
  Unimodular u{algebra::ScalarMatrix::identity(n), algebra::ScalarMatrix::identity(n)};
  if (n < 2) {
    if (n == 1) {
      const int e = uniform(rng, -2, 2);
      u.forward(0, 0) = algebra::NovikovScalar::monomial(Rational{e});
      u.inverse(0, 0) = algebra::NovikovScalar::monomial(Rational{-e});
    }
    return u;
  }
  for (int s = 0; s < steps; ++s) {
    const auto i = static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(n) - 1));
    auto j = static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(n) - 2));
    if (j >= i) ++j;
    const auto f = random_nonzero_scalar(rng, -1, 1);
    // E = I + f e_ij is its own inverse in characteristic 2.
    u.forward.add_row_multiple(i, j, f);
    u.inverse.add_col_multiple(j, i, f);
  }
  return u;
}

// C_{k+1} --d_in--> C_k --d_out--> C_{k-1} with known ranks and torsion.
struct RandomComplex {
  algebra::ScalarMatrix d_in;
  algebra::ScalarMatrix d_out;
  std::size_t rank_in = 0;
  std::size_t rank_out = 0;
  std::size_t free_rank = 0;
  std::vector<algebra::NovikovScalar> in_factors;  // diagonal of d_in before conjugation
};

inline RandomComplex random_complex(Engine& rng, int max_ambient = 8) {
  RandomComplex rc;
  const auto ambient = static_cast<std::size_t>(uniform(rng, 1, max_ambient));
  const auto upper = static_cast<std::size_t>(uniform(rng, 0, 4));
  const auto lower = static_cast<std::size_t>(uniform(rng, 0, 4));
  rc.rank_in = static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(std::min(upper, ambient))));
  rc.rank_out = static_cast<std::size_t>(
      uniform(rng, 0, static_cast<int>(std::min(lower, ambient - rc.rank_in))));
  rc.free_rank = ambient - rc.rank_in - rc.rank_out;

  // Standard form: the first rank_in basis vectors of C_k are f_i times images,
  // the last rank_out map onto basis vectors of C_{k-1}.
  algebra::ScalarMatrix din(ambient, upper);
  algebra::ScalarMatrix dout(lower, ambient);
  for (std::size_t i = 0; i < rc.rank_in; ++i) {
    auto f = coin(rng) ? algebra::NovikovScalar::monomial(Rational{uniform(rng, -2, 2)})
                       : random_nonzero_scalar(rng, 0, 2);
    din(i, i) = f;
    rc.in_factors.push_back(f);
  }
  for (std::size_t i = 0; i < rc.rank_out; ++i) {
    dout(i, ambient - 1 - i) = random_nonzero_scalar(rng, -1, 1);
  }
  const auto pu = random_unimodular(rng, upper, 6);
  const auto pk = random_unimodular(rng, ambient, 10);
  const auto pl = random_unimodular(rng, lower, 6);
  rc.d_in = pk.forward * din * pu.inverse;
  rc.d_out = pl.forward * dout * pk.inverse;
  return rc;
}

// Pearl fixture on a surface (n = 2, lambda_pi = 6) with Maslov-2 classes
// only and no through_point markings. Candidates that fail d^2 = 0 are
// resampled, so the result always assembles.
inline model::LagrangianData random_pearl_fixture(Engine& rng, const model::ManifoldData& m) {
  for (;;) {
    model::LagrangianData l;
    l.name = "L";
    l.dim = 2;
    const int points = uniform(rng, 1, 6);
    for (int i = 0; i < points; ++i) {
      l.critical_points.push_back({"x" + std::to_string(i), uniform(rng, 0, 2)});
    }
    const int classes = uniform(rng, 0, 3);
    for (int i = 0; i < classes; ++i) {
      const int mu = coin(rng, 0.75) ? 2 : 4;
      l.classes.push_back({"B" + std::to_string(i), mu, Rational{mu} / m.lambda_pi, 0, false, 0});
    }
    for (const auto& x : l.critical_points) {
      for (const auto& y : l.critical_points) {
        if (x.index - y.index == 1 && coin(rng, 0.5)) {
          l.morse_counts.push_back({x.name, y.name, "", static_cast<std::uint64_t>(uniform(rng, 1, 3))});
        }
        for (const auto& c : l.classes) {
          if (model::pearl_dimension(x, y, c.maslov) == 0 && coin(rng, 0.4)) {
            l.quantum_counts.push_back(
                {x.name, y.name, c.name, static_cast<std::uint64_t>(uniform(rng, 1, 3))});
          }
        }
      }
    }
    try {
      pearl::assemble_pearl_complex(m, l);
      return l;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NotAComplex) throw;
    }
  }
}

// Transverse pair whose strips form a partial matching, so d^2 = 0 holds by
// construction; extra even counts exercise mod-2 cancellation.
inline model::FloerPairData random_floer_pair(Engine& rng) {
  model::FloerPairData pair;
  pair.name = "P";
  pair.min_maslov_assertion = 2 * uniform(rng, 2, 3);
  const int points = uniform(rng, 0, 7);
  for (int i = 0; i < points; ++i) pair.intersection_points.push_back("z" + std::to_string(i));
  const int classes = uniform(rng, 1, 3);
  for (int i = 0; i < classes; ++i) {
    pair.strip_classes.push_back(
        {"s" + std::to_string(i), 1, Rational{uniform(rng, 1, 9), uniform(rng, 1, 6)}, 0, false, 0});
  }
  std::vector<int> order(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) order[static_cast<std::size_t>(i)] = i;
  std::shuffle(order.begin(), order.end(), rng);
  for (std::size_t i = 0; i + 1 < order.size(); i += 2) {
    if (!coin(rng, 0.7)) continue;
    const auto& from = pair.intersection_points[static_cast<std::size_t>(order[i])];
    const auto& to = pair.intersection_points[static_cast<std::size_t>(order[i + 1])];
    const auto& cls = pair.strip_classes[static_cast<std::size_t>(uniform(rng, 0, classes - 1))];
    pair.strip_counts.push_back({from, to, cls.name, static_cast<std::uint64_t>(2 * uniform(rng, 0, 2) + 1)});
  }
  if (points >= 2 && coin(rng)) {
    pair.strip_counts.push_back({pair.intersection_points[0], pair.intersection_points[1],
                                 pair.strip_classes[0].name, 2});
  }
  return pair;
}

}  // namespace lagblow::testing
