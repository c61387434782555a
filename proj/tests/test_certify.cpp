#include <gtest/gtest.h>

#include "support.hpp"

using namespace cascades;
namespace fx = cascades::fixtures;

namespace {

const Polynomial kQuartic{473, -648, 198, -24, 1};

std::vector<Rational> exact_values(const std::vector<IsolatedRoot>& roots) {
  std::vector<Rational> out;
  for (const auto& r : roots) {
    EXPECT_TRUE(r.is_exact());
    out.push_back(r.value);
  }
  return out;
}

}  // namespace

TEST(Interleaving, Quartic) {
  const auto r = check_interleaving(kQuartic);
  EXPECT_TRUE(r.valid());
  EXPECT_EQ(exact_values(r.p_roots), (std::vector<Rational>{1, 11}));
  EXPECT_EQ(exact_values(r.dp_roots), (std::vector<Rational>{3, 6, 9}));
  ASSERT_EQ(r.gaps.size(), 1u);
  EXPECT_EQ(r.gaps[0].count, 3);
  EXPECT_EQ(r.dp_below, 0);
  EXPECT_EQ(r.dp_above, 0);
  // p' = 4(x - 3)(x - 6)(x - 9) as an exact identity.
  EXPECT_EQ(derivative(kQuartic), from_roots(std::vector<Rational>{3, 6, 9}, 4));
}

TEST(Interleaving, ThreeSimpleRoots) {
  const auto r = check_interleaving(Polynomial{-6, 11, -6, 1});
  EXPECT_TRUE(r.valid());
  ASSERT_EQ(r.gaps.size(), 2u);
  EXPECT_EQ(r.gaps[0].count, 1);
  EXPECT_EQ(r.gaps[1].count, 1);
}

TEST(Interleaving, NoRealRoots) {
  const auto r = check_interleaving(Polynomial{1, 0, 1});
  EXPECT_TRUE(r.valid());
  EXPECT_TRUE(r.p_roots.empty());
  EXPECT_TRUE(r.gaps.empty());
  ASSERT_EQ(r.dp_roots.size(), 1u);
  EXPECT_EQ(r.dp_roots[0].value, Rational(0));
  EXPECT_EQ(r.dp_below + r.dp_above, 1);
}

TEST(Interleaving, RejectsLowDegree) {
  EXPECT_THROW(check_interleaving(Polynomial{-1, 1}), PreconditionError);
  EXPECT_THROW(check_interleaving(Polynomial{}), PreconditionError);
}

TEST(Interleaving, SeparatedEnclosuresAreOrdered) {
  // Irrational roots of p and p' close together force separation.
  const Polynomial p = Polynomial{-2, 0, 1} * Polynomial{-3, 0, 1} * Polynomial{-5, 1};
  const auto r = check_interleaving(p);
  EXPECT_TRUE(r.valid());
  std::vector<std::pair<Rational, Rational>> all;
  for (const auto& x : r.p_roots) all.emplace_back(x.lower(), x.upper());
  for (const auto& x : r.dp_roots) all.emplace_back(x.lower(), x.upper());
  std::sort(all.begin(), all.end());
  for (std::size_t i = 0; i + 1 < all.size(); ++i) EXPECT_LE(all[i].second, all[i + 1].first);
}

TEST(Interleaving, RandomAllRealRooted) {
  fx::Rng rng(51);
  for (int i = 0; i < 200; ++i) {
    const auto c = fx::all_real_rooted(rng, fx::uniform(rng, 3, 7));
    const auto r = check_interleaving(c.p);
    EXPECT_TRUE(r.valid()) << to_text(c.p);
    EXPECT_EQ(r.p_roots.size(), c.roots.size());
    EXPECT_EQ(r.gaps.size(), c.roots.size() - 1);
    // All roots of p' are real and simple here, one per gap.
    for (const auto& g : r.gaps) EXPECT_EQ(g.count, 1);
  }
}

TEST(Interleaving, RandomGeneralPolynomials) {
  fx::Rng rng(52);
  for (int i = 0; i < 200; ++i) {
    const auto p = fx::random_integer_poly(rng, fx::uniform(rng, 2, 7), 100);
    EXPECT_TRUE(check_interleaving(p).valid()) << to_text(p);
  }
}

TEST(RollePoint, Examples) {
  const auto a = rolle_point(Polynomial{0, -2, 1}, 0, 2);
  EXPECT_EQ(exact_values(a), (std::vector<Rational>{1}));

  const auto b = rolle_point(kQuartic, 1, 11);
  EXPECT_EQ(exact_values(b), (std::vector<Rational>{3, 6, 9}));

  const Polynomial cubic{0, -3, 0, 1};
  ASSERT_EQ(cubic(-2), cubic(1));
  EXPECT_EQ(exact_values(rolle_point(cubic, -2, 1)), (std::vector<Rational>{-1}));
}

TEST(RollePoint, Preconditions) {
  EXPECT_THROW(rolle_point(kQuartic, 0, 3), PreconditionError);
  EXPECT_THROW(rolle_point(kQuartic, 11, 1), PreconditionError);
}

TEST(RollePoint, NeverEmpty) {
  fx::Rng rng(53);
  for (int i = 0; i < 200; ++i) {
    const auto base = fx::random_rational_poly(rng, fx::uniform(rng, 2, 6), 30, 4);
    const Rational a = fx::random_rational(rng, 20, 3);
    Rational b = fx::random_rational(rng, 20, 3);
    if (a == b) continue;
    const Rational lo = std::min(a, b), hi = std::max(a, b);
    // p(x) - p(lo) vanishes at lo; tilt it so it also vanishes at hi.
    const Polynomial shifted = base - Polynomial::constant(base(lo));
    const Polynomial p = shifted - Polynomial{-lo, 1} * (shifted(hi) / (hi - lo));
    ASSERT_EQ(p(lo), p(hi));
    if (p.is_zero() || p.degree() < 2) continue;
    const auto pts = rolle_point(p, lo, hi);
    EXPECT_FALSE(pts.empty()) << to_text(p);
    for (const auto& r : pts) EXPECT_TRUE(lo <= r.lower() && r.upper() <= hi);
  }
}

TEST(GridScan, Examples) {
  const auto a = grid_scan_oracle(Polynomial{-2, 0, 1}, 0, 2, 1000);
  ASSERT_EQ(a.size(), 1u);
  EXPECT_EQ(a[0].conclusion, Conclusion::SignChange);
  EXPECT_LT(a[0].lo * a[0].lo, Rational(2));
  EXPECT_GT(a[0].hi * a[0].hi, Rational(2));

  const auto b = grid_scan_oracle(kQuartic, 0, 649, 10000);
  ASSERT_EQ(b.size(), 2u);
  EXPECT_TRUE(b[0].lo <= Rational(1) && Rational(1) <= b[0].hi);
  EXPECT_TRUE(b[1].lo <= Rational(11) && Rational(11) <= b[1].hi);

  const auto c = grid_scan_oracle(Polynomial{0, 0, 0, 1}, -1, 1, 2);
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c[0].conclusion, Conclusion::ExactRootAtLo);
  EXPECT_EQ(c[0].lo, Rational(0));
}

TEST(GridScan, Preconditions) {
  EXPECT_THROW(grid_scan_oracle(kQuartic, 1, 1, 10), PreconditionError);
  EXPECT_THROW(grid_scan_oracle(kQuartic, 0, 1, 0), PreconditionError);
}

TEST(GridScan, AgreesWithIsolationOnConstructedSeparation) {
  fx::Rng rng(54);
  for (int i = 0; i < 100; ++i) {
    const auto c = fx::all_real_rooted(rng, fx::uniform(rng, 1, 6), 20, 4);
    Rational sep = Rational(1000);
    for (std::size_t k = 0; k + 1 < c.roots.size(); ++k) sep = std::min(sep, c.roots[k + 1] - c.roots[k]);
    const Rational lo = c.roots.front() - Rational(1), hi = c.roots.back() + Rational(1);
    // Cells narrower than half the separation.
    const auto steps = static_cast<std::size_t>(ceil((hi - lo) * Rational(2) / sep).get_ui()) + 1;
    const auto hits = grid_scan_oracle(c.p, lo, hi, steps);
    const auto roots = isolate_all_roots(c.p);
    ASSERT_EQ(hits.size(), roots.size()) << to_text(c.p);
    for (std::size_t k = 0; k < hits.size(); ++k)
      EXPECT_TRUE(hits[k].lo <= roots[k].value && roots[k].value <= hits[k].hi);
  }
}

TEST(DerivativeSignFlip, Examples) {
  const Polynomial a{-1, 0, 1};
  const auto ra = isolate_all_roots(a);
  EXPECT_TRUE(check_derivative_sign_flip(a, ra[0], ra[1]));

  const auto rq = isolate_all_roots(kQuartic);
  EXPECT_EQ(derivative(kQuartic)(1), Rational(-320));
  EXPECT_EQ(derivative(kQuartic)(11), Rational(320));
  EXPECT_TRUE(check_derivative_sign_flip(kQuartic, rq[0], rq[1]));

  const Polynomial c{-6, 11, -6, 1};
  const auto rc = isolate_all_roots(c);
  EXPECT_TRUE(check_derivative_sign_flip(c, rc[0], rc[1]));
  EXPECT_TRUE(check_derivative_sign_flip(c, rc[1], rc[2]));
}

TEST(DerivativeSignFlip, Preconditions) {
  const Polynomial c{-6, 11, -6, 1};
  const auto rc = isolate_all_roots(c);
  EXPECT_THROW(check_derivative_sign_flip(c, rc[0], rc[2]), PreconditionError);
  const Polynomial d = c * Polynomial{-1, 1};
  const auto rd = isolate_all_roots(d);
  EXPECT_THROW(check_derivative_sign_flip(d, rd[0], rd[1]), PreconditionError);
}

TEST(DerivativeSignFlip, RandomCorpusWithIrrationalRoots) {
  fx::Rng rng(55);
  for (int i = 0; i < 100; ++i) {
    const auto c = fx::mixed_roots(rng, fx::uniform(rng, 1, 4));
    const auto roots = isolate_all_roots(c.p);
    for (std::size_t k = 0; k + 1 < roots.size(); ++k)
      EXPECT_TRUE(check_derivative_sign_flip(c.p, roots[k], roots[k + 1])) << to_text(c.p);
  }
}
