#pragma once

#include <string>
#include <vector>

#include "cascades/errors.hpp"
#include "cascades/polynomial.hpp"

namespace cascades {

/// Fractional bits used when rounding the square root in newton_bound up
/// to a dyadic rational.
inline constexpr unsigned long kNewtonBoundBits = 32;

namespace detail {

inline Polynomial with_positive_leading(const Polynomial& p) {
  return p.leading().sign() < 0 ? -p : p;
}

}  // namespace detail

/// True when p, after making its leading coefficient positive, has a
/// negative coefficient. Without one there are no positive roots.
inline bool has_negative_coefficient(const Polynomial& p) {
  if (p.is_zero()) return false;
  const Polynomial q = detail::with_positive_leading(p);
  for (const auto& c : q.coefficients())
    if (c.sign() < 0) return true;
  return false;
}

/// Great hypothesis a/c + 1: a is the largest magnitude among the negative
/// coefficients, c the leading coefficient. Every positive root lies
/// strictly below it. Returns 1 when no coefficient is negative.
inline Rational great_hypothesis(const Polynomial& p) {
  if (p.is_zero() || p.degree() < 1) throw PreconditionError("great_hypothesis requires degree >= 1");
  const Polynomial q = detail::with_positive_leading(p);
  Rational a;
  for (const auto& c : q.coefficients())
    if (c.sign() < 0 && -c > a) a = -c;
  return a / q.leading() + Rational(1);
}

/// Small hypothesis: only positive roots are sought, so the bound below is 0.
inline Rational small_hypothesis(const Polynomial& /*p*/) { return Rational(0); }

/// Sum of the squared roots (over C), e1^2 - 2 e2, read off the two
/// coefficients below the leading one.
inline Rational power_sum_squares(const Polynomial& p) {
  if (p.is_zero() || p.degree() < 2) throw PreconditionError("power sum needs degree >= 2");
  const auto n = static_cast<std::size_t>(p.degree());
  const Rational e1 = -p[n - 1] / p.leading();
  const Rational e2 = p[n - 2] / p.leading();
  return e1 * e1 - Rational(2) * e2;
}

/// Newton's bound: a dyadic upper rounding (kNewtonBoundBits) of the square
/// root of the sum of squared roots. Falls back to great_hypothesis when
/// that sum is negative.
///
/// It bounds |r| for every real root only when all roots are real; complex
/// pairs contribute 2(a^2 - b^2) to the sum and can pull it below r^2.
inline Rational newton_bound(const Polynomial& p) {
  const Rational s2 = power_sum_squares(p);
  if (s2.sign() < 0) return great_hypothesis(p);
  return sqrt_upper(s2, kNewtonBoundBits);
}

enum class BoundFlag { NoNegativeCoefficient, NewtonFallback };

inline std::string to_string(BoundFlag f) {
  switch (f) {
    case BoundFlag::NoNegativeCoefficient: return "no_negative_coefficient";
    case BoundFlag::NewtonFallback: return "newton_fallback";
  }
  return "unknown";
}

struct RootBounds {
  Rational small;
  Rational great;
  /// Only present for degree >= 2.
  bool has_newton = false;
  Rational newton;
  std::vector<BoundFlag> flags;
};

inline RootBounds root_bounds(const Polynomial& p) {
  RootBounds b;
  b.small = small_hypothesis(p);
  b.great = great_hypothesis(p);
  if (!has_negative_coefficient(p)) b.flags.push_back(BoundFlag::NoNegativeCoefficient);
  if (p.degree() >= 2) {
    b.has_newton = true;
    b.newton = newton_bound(p);
    if (power_sum_squares(p).sign() < 0) b.flags.push_back(BoundFlag::NewtonFallback);
  }
  return b;
}

}  // namespace cascades
