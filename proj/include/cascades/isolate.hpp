#pragma once

// Real-root isolation by the method of cascades.
//
// The input is reduced to its squarefree part and differentiated down to a
// linear polynomial. Ascending the chain, the distinct positive roots of
// level i - 1 are exactly the turning points of level i, so between any two
// consecutive boundaries (0, those roots, the great hypothesis of level i)
// level i is strictly monotone and has a root iff its sign differs at the two
// ends. Signs at irrational boundaries are settled exactly: a mean-value
// bound on the enclosure, and after kGcdFallbackBits of refinement a gcd
// test for a shared root.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "cascades/bounds.hpp"
#include "cascades/cascade.hpp"
#include "cascades/certificate.hpp"
#include "cascades/errors.hpp"
#include "cascades/polynomial.hpp"

namespace cascades {

/// Enclosure width 2^-kGcdFallbackBits below which boundary sign resolution
/// also asks gcd(f, witness) whether the boundary is a root of f.
inline constexpr long kGcdFallbackBits = 64;

/// One distinct real root held as an exact value (lo == hi) or as an open
/// interval on which `witness` changes sign and has no other root.
struct RootEnclosure {
  Rational lo;
  Rational hi;
  bool exact = false;
  Polynomial witness;

  static RootEnclosure at(Rational v, Polynomial witness) {
    return {v, v, true, std::move(witness)};
  }

  static RootEnclosure between(Rational lo, Rational hi, Polynomial witness) {
    return {std::move(lo), std::move(hi), false, std::move(witness)};
  }

  Rational width() const { return hi - lo; }

  /// Splits at lo < probe < hi, keeping the half with the root.
  void split_at(const Rational& probe) {
    const Rational wp = witness(probe);
    if (wp.is_zero()) {
      lo = hi = probe;
      exact = true;
    } else if (wp.sign() == witness(lo).sign()) {
      lo = probe;
    } else {
      hi = probe;
    }
  }

  void bisect() {
    if (!exact) split_at(midpoint(lo, hi));
  }
};

namespace detail {

/// Upper bound for |f'| on [-R, R].
inline Rational derivative_magnitude_bound(const Polynomial& f, const Rational& radius) {
  Rational m;
  Rational power(1);
  const auto c = f.coefficients();
  for (std::size_t k = 1; k < c.size(); ++k) {
    m += abs(c[k]) * Rational(static_cast<long>(k)) * power;
    power *= radius;
  }
  return m;
}

inline std::optional<int> sign_on_interval(const Polynomial& f, const Rational& lo, const Rational& hi) {
  const Rational mid = midpoint(lo, hi);
  const Rational fm = f(mid);
  if (fm.is_zero()) return std::nullopt;
  const Rational radius = std::max(abs(lo), abs(hi));
  const Rational spread = derivative_magnitude_bound(f, radius) * (hi - lo) / Rational(2);
  if (abs(fm) > spread) return fm.sign();
  return std::nullopt;
}

}  // namespace detail

/// Exact sign of f at the root held by `r`, refining `r` in place.
///
/// When the result is nonzero and r is not exact, f has that sign on the
/// whole closed enclosure [r.lo, r.hi] afterwards.
inline int sign_at(const Polynomial& f, RootEnclosure& r) {
  if (r.exact) return f(r.lo).sign();
  const Rational threshold = pow2(-kGcdFallbackBits);
  bool gcd_checked = false;
  for (;;) {
    if (auto s = detail::sign_on_interval(f, r.lo, r.hi)) return *s;
    if (!gcd_checked && r.width() < threshold) {
      gcd_checked = true;
      Polynomial h = gcd(f, r.witness);
      if (!h.is_constant()) {
        h = squarefree_part(h).squarefree;
        if (h(r.lo).sign() * h(r.hi).sign() < 0) return 0;
      }
    }
    r.bisect();
    if (r.exact) return f(r.lo).sign();
  }
}

/// Promotes a bracketed root to exact when it is rational. A rational root
/// of a primitive integer polynomial with leading coefficient L is k/L for
/// some integer k, so the enclosure is narrowed until it holds at most one
/// such candidate, which is then tested.
inline void promote_rational(RootEnclosure& r) {
  if (r.exact) return;
  const Polynomial prim = primitive_part(r.witness);
  const Rational lead = prim.leading();
  for (;;) {
    if (r.exact) return;
    const Integer first = floor(r.lo * lead) + 1;
    const Integer last = ceil(r.hi * lead) - 1;
    if (last < first) return;
    if (last == first) {
      const Rational candidate = Rational(first) / lead;
      if (prim(candidate).is_zero()) {
        r.lo = r.hi = candidate;
        r.exact = true;
      }
      return;
    }
    r.bisect();
  }
}

struct LevelRoots {
  /// Degree of the level polynomial.
  int level = 0;
  Rational great;
  /// Distinct positive roots in ascending order, pairwise disjoint.
  std::vector<RootEnclosure> roots;
};

namespace detail {

inline LevelRoots linear_level(const Polynomial& f) {
  LevelRoots out{1, great_hypothesis(f), {}};
  const Rational r = -f[0] / f[1];
  if (r.sign() > 0) out.roots.push_back(RootEnclosure::at(r, f));
  return out;
}

struct Boundary {
  RootEnclosure where;
  int sign = 0;
};

inline LevelRoots ascend(const Polynomial& f, int level, const std::vector<RootEnclosure>& below) {
  LevelRoots out{level, great_hypothesis(f), {}};
  const Rational& great = out.great;

  std::vector<Boundary> bounds;
  bounds.push_back({RootEnclosure::at(Rational(0), f), 0});
  for (RootEnclosure r : below) {
    if (!r.exact && r.lo < great && great < r.hi) r.split_at(great);
    if (r.exact ? r.lo < great : r.hi <= great) bounds.push_back({std::move(r), 0});
  }
  bounds.push_back({RootEnclosure::at(great, f), 0});

  for (std::size_t j = 0; j < bounds.size(); ++j) {
    auto& b = bounds[j];
    b.sign = sign_at(f, b.where);
    const bool interior = j != 0 && j + 1 != bounds.size();
    if (j > 0) {
      const auto& prev = bounds[j - 1];
      if (prev.sign * b.sign < 0) {
        RootEnclosure root = RootEnclosure::between(prev.where.hi, b.where.lo, f);
        promote_rational(root);
        out.roots.push_back(std::move(root));
      }
    }
    if (b.sign == 0 && interior) {
      if (b.where.exact) {
        out.roots.push_back(RootEnclosure::at(b.where.lo, f));
      } else {
        Polynomial shared = squarefree_part(gcd(f, b.where.witness)).squarefree;
        RootEnclosure root = RootEnclosure::between(b.where.lo, b.where.hi, std::move(shared));
        promote_rational(root);
        out.roots.push_back(std::move(root));
      }
    }
  }
  return out;
}

}  // namespace detail

/// Positive roots of every cascade level, linear level first. The chain is
/// expected to come from cascade_chain of a squarefree polynomial.
inline std::vector<LevelRoots> cascade_ascent(const CascadeChain& chain) {
  std::vector<LevelRoots> out;
  out.reserve(chain.size());
  out.push_back(detail::linear_level(chain.levels.front()));
  for (std::size_t i = 1; i < chain.size(); ++i)
    out.push_back(detail::ascend(chain.levels[i], static_cast<int>(i) + 1, out.back().roots));
  return out;
}

namespace detail {

inline int bracket_multiplicity(const SquarefreeDecomposition& dec, const Rational& lo, const Rational& hi) {
  for (const auto& f : dec.factors)
    if (f.factor(lo).sign() * f.factor(hi).sign() < 0) return f.multiplicity;
  return 1;
}

inline IsolatedRoot to_isolated(const RootEnclosure& r, const SquarefreeDecomposition& dec, int level) {
  if (r.exact) return IsolatedRoot::exact(r.lo, dec.multiplicity_at(r.lo), level);
  return IsolatedRoot::bracketed(sign_change(dec.squarefree, r.lo, r.hi),
                                 bracket_multiplicity(dec, r.lo, r.hi), level);
}

}  // namespace detail

/// Positive real roots of p in ascending order. Bracketed roots carry a
/// certificate on squarefree_part(p).squarefree.
inline std::vector<IsolatedRoot> isolate_positive_roots(const Polynomial& p) {
  if (p.is_zero() || p.degree() < 1) throw PreconditionError("isolation requires degree >= 1");
  const auto dec = squarefree_part(p);
  const auto chain = cascade_chain(dec.squarefree);
  const auto levels = cascade_ascent(chain);
  const int top = dec.squarefree.degree();
  std::vector<IsolatedRoot> out;
  for (const auto& r : levels.back().roots) out.push_back(detail::to_isolated(r, dec, top));
  return out;
}

/// Exact 0 multiplicity: the lowest exponent with a nonzero coefficient.
inline int zero_root_multiplicity(const Polynomial& p) {
  int k = 0;
  while (p[static_cast<std::size_t>(k)].is_zero()) ++k;
  return k;
}

/// All real roots of p in ascending order: positive roots of p, mirrored
/// positive roots of p(-x), and 0 when p(0) = 0.
inline std::vector<IsolatedRoot> isolate_all_roots(const Polynomial& p) {
  if (p.is_zero() || p.degree() < 1) throw PreconditionError("isolation requires degree >= 1");
  const Polynomial sqf = squarefree_part(p).squarefree;
  std::vector<IsolatedRoot> out;
  auto negative = isolate_positive_roots(reflect(p));
  for (auto it = negative.rbegin(); it != negative.rend(); ++it) {
    if (it->is_exact()) {
      out.push_back(IsolatedRoot::exact(-it->value, it->multiplicity, it->level));
    } else {
      out.push_back(IsolatedRoot::bracketed(sign_change(sqf, -it->certificate.hi, -it->certificate.lo),
                                            it->multiplicity, it->level));
    }
  }
  if (p[0].is_zero()) out.push_back(IsolatedRoot::exact(Rational(0), zero_root_multiplicity(p), sqf.degree()));
  for (auto& r : isolate_positive_roots(p)) {
    if (!r.is_exact()) r.certificate = sign_change(sqf, r.certificate.lo, r.certificate.hi);
    out.push_back(std::move(r));
  }
  return out;
}

/// The root's enclosure with the squarefree part of its source polynomial
/// as witness, ready for refinement or sign queries.
inline RootEnclosure to_enclosure(const IsolatedRoot& r, const Polynomial& squarefree) {
  if (r.is_exact()) return RootEnclosure::at(r.value, squarefree);
  return RootEnclosure::between(r.certificate.lo, r.certificate.hi, squarefree);
}

struct IntervalRoots {
  /// Roots strictly inside (lo, hi), ascending.
  std::vector<IsolatedRoot> roots;
  /// Exact roots sitting on lo or hi; excluded from `roots` because the
  /// interval is open.
  std::vector<Rational> boundary_roots;
};

/// Real roots of p inside the open interval (lo, hi). Brackets crossing an
/// endpoint are split there.
inline IntervalRoots isolate_in_interval(const Polynomial& p, const Rational& lo, const Rational& hi) {
  if (!(lo < hi)) throw PreconditionError("interval requires lo < hi");
  const auto dec = squarefree_part(p);
  IntervalRoots out;
  for (const auto& r : isolate_all_roots(p)) {
    if (r.is_exact()) {
      if (r.value == lo || r.value == hi)
        out.boundary_roots.push_back(r.value);
      else if (lo < r.value && r.value < hi)
        out.roots.push_back(r);
      continue;
    }
    RootEnclosure e = to_enclosure(r, dec.squarefree);
    if (e.hi <= lo || e.lo >= hi) continue;
    if (e.lo < lo) e.split_at(lo);
    if (!e.exact && e.lo < hi && hi < e.hi) e.split_at(hi);
    if (e.exact) {
      if (e.lo == lo || e.lo == hi) out.boundary_roots.push_back(e.lo);
      else if (lo < e.lo && e.lo < hi) out.roots.push_back(IsolatedRoot::exact(e.lo, r.multiplicity, r.level));
      continue;
    }
    if (e.hi <= lo || e.lo >= hi) continue;
    out.roots.push_back(IsolatedRoot::bracketed(sign_change(dec.squarefree, e.lo, e.hi), r.multiplicity, r.level));
  }
  return out;
}

}  // namespace cascades
