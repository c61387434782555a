#pragma once

// Replay of Rolle's worked quartic v^4 - 24v^3 + 198v^2 - 648v + 473 = 0
// through the whole pipeline, checked against the values recorded for it.

#include <string>
#include <utility>
#include <vector>

#include "cascades/bounds.hpp"
#include "cascades/cascade.hpp"
#include "cascades/certificate.hpp"
#include "cascades/certify.hpp"
#include "cascades/isolate.hpp"
#include "cascades/polynomial.hpp"
#include "cascades/refine.hpp"

namespace cascades {

struct CascadeCheck {
  int level = 0;
  Polynomial computed;
  Rational scaling;
  Polynomial expected;
  /// Constant multiples of each other, hence the same roots.
  bool proportional = false;
};

struct ValueCheck {
  std::string label;
  Rational computed;
  Rational expected;
  bool match() const { return computed == expected; }
};

struct ReplayResult {
  Polynomial equation;
  std::vector<CascadeCheck> cascades;
  std::vector<ValueCheck> great_hypotheses;
  std::vector<ValueCheck> sign_table;
  /// (0, 6) on the second cascade narrowed at 5 and then at 4.
  std::vector<SignCertificate> narrowing;
  std::vector<IsolatedRoot> roots;
  /// Bisection of the second cascade's left root from (4, 5) to 10^-12.
  RootApproximation left_root_refinement;
  InterleavingReport interleaving;
  std::vector<std::string> mismatches;

  bool ok() const { return mismatches.empty(); }
};

inline bool proportional(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return a * b.leading() == b * a.leading();
}

inline Polynomial rolle_quartic() { return Polynomial{473, -648, 198, -24, 1}; }

inline ReplayResult replay_rolle_example() {
  ReplayResult out;
  out.equation = rolle_quartic();
  // Rolle's four cascades as he wrote them, linear first.
  const std::vector<Polynomial> rolle = {
      Polynomial{-24, 4},
      Polynomial{198, -72, 6},
      Polynomial{-648, 396, -72, 4},
      rolle_quartic(),
  };
  const auto& f2 = rolle[1];
  const auto& f3 = rolle[2];
  const auto& f4 = rolle[3];

  const auto chain = cascade_chain(out.equation);
  for (std::size_t i = 0; i < chain.size(); ++i) {
    CascadeCheck c{static_cast<int>(i) + 1, chain.levels[i], chain.scalings[i], rolle[i], false};
    c.proportional = proportional(c.computed, c.expected);
    if (!c.proportional) out.mismatches.push_back("cascade level " + std::to_string(c.level) + " differs from Rolle's");
    out.cascades.push_back(std::move(c));
  }

  out.great_hypotheses = {
      {"great_hypothesis level 4", great_hypothesis(chain.levels[3]), Rational(649)},
      {"great_hypothesis level 2", great_hypothesis(chain.levels[1]), Rational(13)},
      {"great_hypothesis level 3", great_hypothesis(chain.levels[2]), Rational(163)},
  };

  out.sign_table = {
      {"f2(5)", f2(5), Rational(-12)}, {"f2(4)", f2(4), Rational(6)},   {"f3(0)", f3(0), Rational(-648)},
      {"f3(5)", f3(5), Rational(32)},  {"f3(4)", f3(4), Rational(40)},  {"f3(3)", f3(3), Rational(0)},
      {"f4(0)", f4(0), Rational(473)}, {"f4(3)", f4(3), Rational(-256)}, {"f4(1)", f4(1), Rational(0)},
  };
  for (const auto* group : {&out.great_hypotheses, &out.sign_table})
    for (const auto& v : *group)
      if (!v.match())
        out.mismatches.push_back(v.label + " = " + v.computed.str() + ", expected " + v.expected.str());

  const auto whole = sign_change(f2, 0, 6);
  const auto at5 = narrow(f2, whole, 5);
  const auto at4 = narrow(f2, at5, 4);
  out.narrowing = {whole, at5, at4};
  if (!(at4.lo == Rational(4) && at4.hi == Rational(5) && at4.conclusion == Conclusion::SignChange))
    out.mismatches.push_back("narrowing of (0, 6) did not end on (4, 5)");

  out.roots = isolate_all_roots(out.equation);
  const bool roots_ok = out.roots.size() == 2 && out.roots[0].is_exact() && out.roots[0].value == Rational(1) &&
                        out.roots[1].is_exact() && out.roots[1].value == Rational(11);
  if (!roots_ok) out.mismatches.push_back("real roots are not exactly {1, 11}");

  out.left_root_refinement = bisect(f2, sign_change(f2, 4, 5), Rational(1) / pow(Rational(10), 12));

  out.interleaving = check_interleaving(out.equation);
  const auto& dp = out.interleaving.dp_roots;
  const bool dp_ok = dp.size() == 3 && dp[0].is_exact() && dp[0].value == Rational(3) && dp[1].is_exact() &&
                     dp[1].value == Rational(6) && dp[2].is_exact() && dp[2].value == Rational(9);
  const bool gap_ok = out.interleaving.gaps.size() == 1 && out.interleaving.gaps[0].count == 3;
  if (!dp_ok) out.mismatches.push_back("derivative roots are not exactly {3, 6, 9}");
  if (!gap_ok) out.mismatches.push_back("expected 3 derivative roots between 1 and 11");
  for (const auto& v : out.interleaving.violations) out.mismatches.push_back("interleaving: " + v);
  return out;
}

}  // namespace cascades
