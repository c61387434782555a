#pragma once

// Theorem-level checks on isolated roots (interleaving of the roots of p and
// p', Rolle points, sign flips of p' across adjacent roots) and the grid
// scan used as an independent oracle in tests.

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "cascades/cascade.hpp"
#include "cascades/certificate.hpp"
#include "cascades/errors.hpp"
#include "cascades/isolate.hpp"
#include "cascades/polynomial.hpp"

namespace cascades {

struct InterleavingGap {
  /// Indices into p_roots of the two neighbouring roots.
  std::size_t left = 0;
  std::size_t right = 0;
  /// Distinct derivative roots strictly between them.
  int count = 0;
  /// Same, counted with multiplicity; odd by the interleaving theorem.
  int weighted = 0;
};

struct InterleavingReport {
  std::vector<IsolatedRoot> p_roots;
  std::vector<IsolatedRoot> dp_roots;
  std::vector<InterleavingGap> gaps;
  std::vector<std::string> violations;
  /// Derivative roots below the least / above the greatest root of p. With no
  /// real roots of p every derivative root counts as below.
  int dp_below = 0;
  int dp_above = 0;

  bool valid() const { return violations.empty(); }
};

namespace detail {

/// Open interiors (or points) strictly ordered: a entirely left of b.
inline bool strictly_left_of(const RootEnclosure& a, const RootEnclosure& b) {
  if (a.exact && b.exact) return a.lo < b.lo;
  return a.hi <= b.lo;
}

inline bool separated(const RootEnclosure& a, const RootEnclosure& b) {
  return strictly_left_of(a, b) || strictly_left_of(b, a);
}

/// Refines until no enclosure of `xs` meets one of `ys`. The two witnesses
/// must have no common root.
inline void separate(std::vector<RootEnclosure>& xs, std::vector<RootEnclosure>& ys) {
  for (auto& x : xs) {
    for (auto& y : ys) {
      while (!separated(x, y)) {
        if (x.exact && y.exact) throw PreconditionError("polynomials share the root " + x.lo.str());
        if (x.exact) {
          y.split_at(x.lo);
        } else if (y.exact) {
          x.split_at(y.lo);
        } else {
          (x.width() >= y.width() ? x : y).bisect();
        }
      }
    }
  }
}

inline IsolatedRoot with_enclosure(const IsolatedRoot& r, const RootEnclosure& e, const Polynomial& squarefree) {
  if (e.exact) return IsolatedRoot::exact(e.lo, r.multiplicity, r.level);
  return IsolatedRoot::bracketed(sign_change(squarefree, e.lo, e.hi), r.multiplicity, r.level);
}

}  // namespace detail

/// Isolates the real roots of the squarefree part q of p and of q', makes
/// all enclosures disjoint, and checks the interleaving theorems:
///   - between neighbouring roots of q lies an odd number of roots of q'
///     (with multiplicity), so at least one;
///   - between neighbouring distinct roots of q' lies at most one root of q;
///   - at most one root of q lies below the least root of q' and at most one
///     above the greatest (with no root of q' at all, q has at most one).
/// Failures are collected in `violations`, never thrown.
inline InterleavingReport check_interleaving(const Polynomial& p) {
  if (p.is_zero() || p.degree() < 2) throw PreconditionError("check_interleaving requires degree >= 2");
  const Polynomial q = squarefree_part(p).squarefree;
  InterleavingReport report;
  if (q.degree() < 2) {
    report.p_roots = isolate_all_roots(q);
    return report;
  }
  const Polynomial dq = derivative(q);
  const Polynomial dq_free = squarefree_part(dq).squarefree;

  auto p_roots = isolate_all_roots(q);
  auto dp_roots = isolate_all_roots(dq);
  std::vector<RootEnclosure> pe, de;
  for (const auto& r : p_roots) pe.push_back(to_enclosure(r, q));
  for (const auto& r : dp_roots) de.push_back(to_enclosure(r, dq_free));
  detail::separate(pe, de);
  for (std::size_t i = 0; i < p_roots.size(); ++i) p_roots[i] = detail::with_enclosure(p_roots[i], pe[i], q);
  for (std::size_t i = 0; i < dp_roots.size(); ++i) dp_roots[i] = detail::with_enclosure(dp_roots[i], de[i], dq_free);

  auto between = [&](const RootEnclosure* left, const RootEnclosure* right, const RootEnclosure& x) {
    return (!left || detail::strictly_left_of(*left, x)) && (!right || detail::strictly_left_of(x, *right));
  };

  for (std::size_t i = 0; i + 1 < pe.size(); ++i) {
    InterleavingGap gap{i, i + 1, 0, 0};
    for (std::size_t j = 0; j < de.size(); ++j) {
      if (!between(&pe[i], &pe[i + 1], de[j])) continue;
      ++gap.count;
      gap.weighted += dp_roots[j].multiplicity;
    }
    if (gap.weighted % 2 == 0)
      report.violations.push_back("gap " + std::to_string(i) + ": " + std::to_string(gap.weighted) +
                                  " derivative roots (with multiplicity), expected an odd number");
    report.gaps.push_back(gap);
  }

  // Intervals cut by consecutive derivative roots, including the two rays.
  for (std::size_t j = 0; j <= de.size(); ++j) {
    const RootEnclosure* left = j == 0 ? nullptr : &de[j - 1];
    const RootEnclosure* right = j == de.size() ? nullptr : &de[j];
    const auto n = std::count_if(pe.begin(), pe.end(), [&](const auto& x) { return between(left, right, x); });
    if (n > 1) {
      std::string where = !left ? "below the least derivative root"
                          : !right ? "above the greatest derivative root"
                                   : "between derivative roots " + std::to_string(j - 1) + " and " + std::to_string(j);
      report.violations.push_back(std::to_string(n) + " roots " + where + ", expected at most one");
    }
  }

  if (pe.empty()) {
    report.dp_below = static_cast<int>(de.size());
  } else {
    for (const auto& d : de) {
      if (detail::strictly_left_of(d, pe.front())) ++report.dp_below;
      if (detail::strictly_left_of(pe.back(), d)) ++report.dp_above;
    }
  }
  report.p_roots = std::move(p_roots);
  report.dp_roots = std::move(dp_roots);
  return report;
}

/// Roots of p' strictly inside (a, b) when p(a) = p(b); never empty.
inline std::vector<IsolatedRoot> rolle_point(const Polynomial& p, const Rational& a, const Rational& b) {
  if (!(a < b)) throw PreconditionError("rolle_point requires a < b");
  if (p(a) != p(b)) throw PreconditionError("rolle_point requires p(a) = p(b)");
  if (p.is_zero() || p.degree() < 2) throw PreconditionError("p is constant on (a, b); every point is critical");
  return isolate_in_interval(derivative(p), a, b).roots;
}

/// Brute-force oracle: samples p at steps + 1 equally spaced points of
/// [lo, hi] and returns one certificate per cell with a sign change or an
/// exact zero. A zero on a grid point is reported once, as ExactRootAtLo of
/// the cell starting there (ExactRootAtHi for the last point).
///
/// Evaluates term by term with explicit powers, sharing nothing with the
/// cascade code path.
inline std::vector<SignCertificate> grid_scan_oracle(const Polynomial& p, const Rational& lo, const Rational& hi,
                                                     std::size_t steps) {
  if (!(lo < hi)) throw PreconditionError("grid_scan_oracle requires lo < hi");
  if (steps == 0) throw PreconditionError("grid_scan_oracle requires steps >= 1");
  const auto coeffs = p.coefficients();
  auto value = [&](const Rational& x) {
    Rational sum;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      if (coeffs[k].is_zero()) continue;
      Rational term = coeffs[k];
      for (std::size_t e = 0; e < k; ++e) term *= x;
      sum += term;
    }
    return sum;
  };
  const Rational h = (hi - lo) / Rational(static_cast<long>(steps));
  std::vector<SignCertificate> hits;
  Rational x0 = lo;
  Rational f0 = value(x0);
  for (std::size_t j = 1; j <= steps; ++j) {
    const Rational x1 = j == steps ? hi : lo + h * Rational(static_cast<long>(j));
    const Rational f1 = value(x1);
    if (f0.is_zero()) {
      hits.push_back({x0, x1, f0, f1, Conclusion::ExactRootAtLo});
    } else if (f1.is_zero()) {
      if (j == steps) hits.push_back({x0, x1, f0, f1, Conclusion::ExactRootAtHi});
    } else if (f0.sign() != f1.sign()) {
      hits.push_back({x0, x1, f0, f1, Conclusion::SignChange});
    }
    x0 = x1;
    f0 = f1;
  }
  return hits;
}

/// Whether p' takes opposite signs at two adjacent simple roots of p. It
/// always should; this is the classical argument for why the cascade
/// boundaries separate roots.
inline bool check_derivative_sign_flip(const Polynomial& p, const IsolatedRoot& r1, const IsolatedRoot& r2) {
  if (r1.multiplicity != 1 || r2.multiplicity != 1) throw PreconditionError("sign flip check needs simple roots");
  const auto all = isolate_all_roots(p);
  auto index_of = [&](const IsolatedRoot& r) {
    std::size_t found = all.size();
    int matches = 0;
    for (std::size_t i = 0; i < all.size(); ++i) {
      const bool overlap = r.is_exact() && all[i].is_exact() ? r.value == all[i].value
                           : r.is_exact()                     ? all[i].contains(r.value)
                           : all[i].is_exact()                ? r.contains(all[i].value)
                                                              : (r.lower() < all[i].upper() && all[i].lower() < r.upper());
      if (overlap) {
        found = i;
        ++matches;
      }
    }
    if (matches != 1) throw PreconditionError("root does not identify a single real root of p");
    return found;
  };
  const std::size_t i1 = index_of(r1);
  const std::size_t i2 = index_of(r2);
  if (i1 + 1 != i2 && i2 + 1 != i1) throw PreconditionError("roots are not adjacent");

  const Polynomial q = squarefree_part(p).squarefree;
  const Polynomial dp = derivative(p);
  auto sign_of_derivative = [&](const IsolatedRoot& r) {
    RootEnclosure e = to_enclosure(r, q);
    return sign_at(dp, e);
  };
  const int s1 = sign_of_derivative(r1);
  const int s2 = sign_of_derivative(r2);
  return s1 != 0 && s2 != 0 && s1 != s2;
}

}  // namespace cascades
