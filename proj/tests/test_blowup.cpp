#include "lagblow/blowup/blowup.hpp"
#include "lagblow/error.hpp"
#include "lagblow/workbench/workspace.hpp"

#include "support/generators.hpp"

#include <gtest/gtest.h>

#include <numeric>

namespace {

using namespace lagblow;
using namespace lagblow::blowup;
using model::DiskClass;
using model::LagrangianData;
using model::ManifoldData;
using lagblow::testing::Engine;

const ManifoldData kCP2{2, Rational{6}, true};

LagrangianData fixture(const char* name) { return workbench::builtin_example(name).lagrangians.at(0); }

LagrangianData with_maslov(std::vector<int> indices, const ManifoldData& m) {
  LagrangianData l;
  l.name = "L";
  l.dim = m.half_dim;
  for (std::size_t i = 0; i < indices.size(); ++i) {
    l.classes.push_back({"c" + std::to_string(i), indices[i], Rational{indices[i]} / m.lambda_pi, 0,
                         false, 0});
  }
  return l;
}

TEST(MonotoneWeight, Examples) {
  EXPECT_EQ(monotone_weight(kCP2), Rational(1, 3));
  EXPECT_EQ(monotone_weight(ManifoldData{2, Rational{2}, true}), Rational{1});
  for (int n = 2; n <= 10; ++n) {
    EXPECT_EQ(monotone_weight(ManifoldData{n, Rational{2 * (n + 1)}, true}), Rational(n - 1, n + 1))
        << "n = " << n;
  }
}

TEST(MonotoneWeight, RejectsDegenerateManifold) {
  EXPECT_THROW(monotone_weight(ManifoldData{1, Rational{6}, true}), Error);
  EXPECT_THROW(monotone_weight(ManifoldData{2, Rational{0}, true}), Error);
}

TEST(MakeParams, ExceptionalLine) {
  const auto p = make_params(ManifoldData{3, Rational{8}, true});
  EXPECT_EQ(p.rho_sq, Rational(1, 2));
  EXPECT_EQ(p.exceptional_line.maslov, 4);
  EXPECT_EQ(p.exceptional_line.area_over_pi, Rational(1, 2));
  EXPECT_EQ(p.exceptional_line.exc_mult, -1);
  // L_E itself is monotone with the same constant.
  EXPECT_EQ(Rational{p.exceptional_line.maslov}, p.lambda_pi * p.exceptional_line.area_over_pi);
}

TEST(ProperTransform, IdentityForZeroMultiplicity) {
  const auto p = make_params(kCP2);
  const DiskClass a{"A0", 2, Rational(1, 3), 0, false, 0};
  const auto t = proper_transform_class(a, 0, p);
  EXPECT_EQ(t.maslov, a.maslov);
  EXPECT_EQ(t.area_over_pi, a.area_over_pi);
  EXPECT_EQ(t.exc_mult, 0);
}

TEST(ProperTransform, RealProjectivePlaneGenerator) {
  const auto t = proper_transform_class({"A", 3, Rational(1, 2), 0, false, 0}, 1, make_params(kCP2));
  EXPECT_EQ(t.maslov, 1);
  EXPECT_EQ(t.area_over_pi, Rational(1, 6));
}

TEST(ProperTransform, CliffordMarkedClass) {
  const DiskClass a{"A1+A2", 4, Rational(2, 3), 0, true, 1};
  const auto t = proper_transform_class(a, 1, make_params(kCP2));
  EXPECT_EQ(t.maslov, 2);
  EXPECT_EQ(t.area_over_pi, Rational(1, 3));
  EXPECT_EQ(t.exc_mult, 1);
  EXPECT_FALSE(t.through_point);
  EXPECT_EQ(t.name, "~A1+A2-L_E");
  EXPECT_EQ(proper_transform_class(a, 0, make_params(kCP2)).name, "~A1+A2");
  EXPECT_TRUE(proper_transform_class(a, 0, make_params(kCP2)).through_point);
  EXPECT_EQ(proper_transform_class(a, 2, make_params(kCP2)).name, "~A1+A2-2L_E");
}

TEST(ProperTransform, Errors) {
  const auto p = make_params(kCP2);
  try {
    proper_transform_class({"A", 2, Rational(1, 3), 0, false, 0}, -1, p);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NegativeMultiplicity);
  }
  EXPECT_THROW(proper_transform_class({"B", 2, Rational(1, 3), 1, false, 0}, 1, p), Error);
}

TEST(BlowupMinMaslov, Examples) {
  EXPECT_EQ(blowup_min_maslov(fixture("rp2-cp2"), make_params(kCP2)), 1);
  EXPECT_EQ(blowup_min_maslov(fixture("clifford-cp2"), make_params(kCP2)), 2);
  const ManifoldData m3{3, Rational{8}, true};
  EXPECT_EQ(blowup_min_maslov(with_maslov({4}, m3), make_params(m3)), 4);
  EXPECT_EQ(blowup_min_maslov(with_maslov({6}, m3), make_params(m3)), 2);
}

TEST(BlowupMinMaslov, NoClassesUsesExceptionalLine) {
  EXPECT_EQ(blowup_min_maslov(LagrangianData{}, make_params(kCP2)), 2);
  const ManifoldData m4{4, Rational{10}, true};
  EXPECT_EQ(blowup_min_maslov(LagrangianData{}, make_params(m4)), 6);
}

TEST(CheckAdmissible, Clifford) {
  const std::vector<LagrangianData> ls{fixture("clifford-cp2")};
  const auto v = check_admissible(kCP2, ls);
  EXPECT_TRUE(v.admissible);
  EXPECT_EQ(v.min_maslov_blowup, 2);
  EXPECT_TRUE(v.diagnostics.empty());
}

TEST(CheckAdmissible, RealProjectivePlane) {
  const std::vector<LagrangianData> ls{fixture("rp2-cp2")};
  const auto v = check_admissible(kCP2, ls);
  EXPECT_FALSE(v.admissible);
  EXPECT_EQ(v.min_maslov_blowup, 1);
  ASSERT_EQ(v.diagnostics.size(), 1u);
  EXPECT_EQ(v.diagnostics[0], "minimal Maslov in blow-up = 1 < 2");
}

TEST(CheckAdmissible, WidthNotAsserted) {
  const std::vector<LagrangianData> ls{fixture("clifford-cp2")};
  const auto v = check_admissible(ManifoldData{2, Rational{6}, false}, ls);
  EXPECT_FALSE(v.admissible);
  EXPECT_FALSE(v.width_asserted);
}

TEST(CheckAdmissible, DifferentMonotonicityConstants) {
  // Monotone for lambda_pi = 6 and 4 respectively; the manifold says 6.
  auto other = with_maslov({2}, ManifoldData{2, Rational{4}, true});
  const std::vector<LagrangianData> ls{fixture("clifford-cp2"), other};
  const auto v = check_admissible(kCP2, ls);
  EXPECT_FALSE(v.admissible);
  EXPECT_FALSE(v.same_lambda_ok);
  EXPECT_FALSE(v.monotone_ok);
}

TEST(CheckAdmissible, CollectionTakesWorstMinimalMaslov) {
  const std::vector<LagrangianData> ls{fixture("clifford-cp2"), fixture("rp2-cp2")};
  const auto v = check_admissible(kCP2, ls);
  EXPECT_FALSE(v.admissible);
  EXPECT_EQ(v.min_maslov_blowup, 1);
}

TEST(CheckAdmissible, EmptyCollection) {
  const auto v = check_admissible(kCP2, std::span<const LagrangianData>{});
  EXPECT_FALSE(v.admissible);
}

TEST(CheckAdmissiblePair, UsesAssertion) {
  model::FloerPairData pair;
  pair.name = "P";
  pair.min_maslov_assertion = 4;
  EXPECT_TRUE(check_admissible_pair(kCP2, pair).admissible);
  pair.min_maslov_assertion = 3;
  EXPECT_EQ(check_admissible_pair(kCP2, pair).min_maslov_blowup, 1);
  EXPECT_FALSE(check_admissible_pair(kCP2, pair).admissible);
  pair.min_maslov_assertion = 0;
  EXPECT_FALSE(check_admissible_pair(kCP2, pair).admissible);
}

// Monotonicity survives the transform for every admissible parameter choice:
// maslov = lambda_pi * area implies the same for A - ell L_E because L_E is
// itself monotone with that constant.
TEST(BlowupProperty, TransformPreservesMonotonicity) {
  Engine rng(61);
  for (int i = 0; i < 500; ++i) {
    const int n = lagblow::testing::uniform(rng, 2, 10);
    const Rational lambda(lagblow::testing::uniform(rng, 1, 40), lagblow::testing::uniform(rng, 1, 9));
    const int mu = lagblow::testing::uniform(rng, -20, 40);
    const int ell = lagblow::testing::uniform(rng, 0, 5);
    const ManifoldData m{n, lambda, true};
    const DiskClass a{"A", mu, Rational{mu} / lambda, 0, false, 0};
    const auto t = proper_transform_class(a, ell, make_params(m));
    EXPECT_EQ(Rational{t.maslov}, lambda * t.area_over_pi);
    EXPECT_EQ(t.maslov, mu - 2 * (n - 1) * ell);
  }
}

TEST(BlowupProperty, MinimalMaslovIsGcdWithLineIndex) {
  Engine rng(62);
  for (int i = 0; i < 300; ++i) {
    const int n = lagblow::testing::uniform(rng, 2, 6);
    const ManifoldData m{n, Rational{2 * (n + 1)}, true};
    std::vector<int> indices;
    const int count = lagblow::testing::uniform(rng, 1, 4);
    int g = 0;
    for (int k = 0; k < count; ++k) {
      indices.push_back(lagblow::testing::uniform(rng, 1, 12));
      g = std::gcd(g, indices.back());
    }
    const auto got = blowup_min_maslov(with_maslov(indices, m), make_params(m));
    EXPECT_EQ(got, std::gcd(g, 2 * (n - 1)));
    // Brute force: the smallest positive value of a*g + b*2(n-1) over small a, b.
    int best = 0;
    for (int a = -30; a <= 30; ++a) {
      for (int b = -30; b <= 30; ++b) {
        const int v = a * g + b * 2 * (n - 1);
        if (v > 0 && (best == 0 || v < best)) best = v;
      }
    }
    EXPECT_EQ(got, best);
  }
}

}  // namespace
