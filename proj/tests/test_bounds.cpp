#include <gtest/gtest.h>

#include "support.hpp"

using namespace cascades;
namespace fx = cascades::fixtures;

namespace {
const Polynomial kQuartic{473, -648, 198, -24, 1};
}

TEST(GreatHypothesis, CascadeValues) {
  EXPECT_EQ(great_hypothesis(kQuartic), Rational(649));
  EXPECT_EQ(great_hypothesis(Polynomial{396, -144, 12}), Rational(13));
  EXPECT_EQ(great_hypothesis(Polynomial{-648, 396, -72, 4}), Rational(163));
}

TEST(GreatHypothesis, NoNegativeCoefficient) {
  const Polynomial p{1, 0, 1};
  EXPECT_EQ(great_hypothesis(p), Rational(1));
  EXPECT_FALSE(has_negative_coefficient(p));
  const auto b = root_bounds(p);
  ASSERT_FALSE(b.flags.empty());
  EXPECT_EQ(b.flags.front(), BoundFlag::NoNegativeCoefficient);
}

TEST(GreatHypothesis, NegativeLeadingCoefficientIsNormalized) {
  EXPECT_EQ(great_hypothesis(-kQuartic), Rational(649));
  EXPECT_THROW(great_hypothesis(Polynomial{5}), PreconditionError);
  EXPECT_THROW(great_hypothesis(Polynomial{}), PreconditionError);
}

TEST(GreatHypothesis, ScaleInvariant) {
  fx::Rng rng(21);
  for (int i = 0; i < 200; ++i) {
    const auto p = fx::random_rational_poly(rng, fx::uniform(rng, 1, 8), 100, 7);
    Rational c = abs(fx::random_rational(rng, 50, 9));
    if (c.is_zero()) c = Rational(3);
    EXPECT_EQ(great_hypothesis(p * c), great_hypothesis(p));
  }
}

TEST(GreatHypothesis, PositiveAtBoundAndNoRootBeyond) {
  fx::Rng rng(22);
  int checked = 0;
  while (checked < 300) {
    auto p = fx::random_integer_poly(rng, fx::uniform(rng, 1, 8), 1000000);
    if (p.leading().sign() < 0) p = -p;
    if (!has_negative_coefficient(p)) continue;
    ++checked;
    const Rational g = great_hypothesis(p);
    EXPECT_GT(p(g), Rational(0));
    // Scan from the bound out to the (independent) Cauchy bound.
    const Rational far = std::max(fx::cauchy_bound(p), g) + Rational(1);
    EXPECT_TRUE(grid_scan_oracle(p, g, far, 400).empty());
    for (const auto& hit : grid_scan_oracle(p, Rational(0), g, 400)) EXPECT_LT(hit.lo, g);
    for (const auto& r : isolate_positive_roots(p)) EXPECT_LE(r.upper(), g);
  }
}

TEST(SmallHypothesis, AlwaysZero) {
  EXPECT_EQ(small_hypothesis(kQuartic), Rational(0));
  EXPECT_EQ(small_hypothesis(Polynomial{-5, 1}), Rational(0));
  for (const auto& r : isolate_all_roots(kQuartic)) EXPECT_GT(r.lower(), small_hypothesis(kQuartic));
}

TEST(NewtonBound, QuarticPowerSum) {
  EXPECT_EQ(power_sum_squares(kQuartic), Rational(180));
  const Rational b = newton_bound(kQuartic);
  EXPECT_GE(b * b, Rational(180));
  EXPECT_LT(b, Rational(Integer(1342), Integer(100)));
  EXPECT_GT(b, Rational(11));
  EXPECT_TRUE(((Integer(1) << kNewtonBoundBits) % b.den()) == 0);
}

TEST(NewtonBound, DoubleRoot) {
  const Polynomial p{1, -2, 1};
  EXPECT_EQ(power_sum_squares(p), Rational(2));
  EXPECT_GE(newton_bound(p) * newton_bound(p), Rational(2));
}

TEST(NewtonBound, ComplexPairFallsBack) {
  const Polynomial p{1, 1, 1};
  EXPECT_EQ(power_sum_squares(p), Rational(-1));
  EXPECT_EQ(newton_bound(p), great_hypothesis(p));
  const auto b = root_bounds(p);
  EXPECT_NE(std::find(b.flags.begin(), b.flags.end(), BoundFlag::NewtonFallback), b.flags.end());
}

TEST(NewtonBound, RejectsLowDegree) {
  EXPECT_THROW(newton_bound(Polynomial{-5, 1}), PreconditionError);
  EXPECT_FALSE(root_bounds(Polynomial{-5, 1}).has_newton);
}

TEST(NewtonBound, BoundsEveryRootOfAllRealRootedPolynomials) {
  fx::Rng rng(23);
  for (int i = 0; i < 300; ++i) {
    const auto c = fx::all_real_rooted(rng, fx::uniform(rng, 2, 8));
    const Rational b = newton_bound(c.p);
    for (const auto& r : c.roots) EXPECT_LE(abs(r), b);
  }
}

TEST(NewtonBound, ComplexRootsCanBreakTheRealRootBound) {
  // (x - 10)(x^2 + 25): s2 = 100 - 50 = 50, while the real root is 10.
  const Polynomial p = Polynomial{-10, 1} * Polynomial{25, 0, 1};
  EXPECT_EQ(power_sum_squares(p), Rational(50));
  EXPECT_LT(newton_bound(p), Rational(10));
}
