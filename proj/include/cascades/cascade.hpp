#pragma once

// Derived-polynomial operators: the cascade step and chain, Hudde's
// progression transform, squarefree decomposition, and the reflection and
// translation substitutions used to move roots onto the positive axis.

#include <cstddef>
#include <utility>
#include <vector>

#include "cascades/errors.hpp"
#include "cascades/polynomial.hpp"

namespace cascades {

struct CascadeStep {
  Polynomial poly;
  /// poly * scaling == derivative(input)
  Rational scaling{1};
};

/// Derivative of p, optionally divided by its content.
///
/// With reduce_content the result is a primitive integer polynomial with a
/// positive leading coefficient and `scaling` carries the removed factor
/// (negative only when p itself has a negative leading coefficient).
inline CascadeStep cascade_step(const Polynomial& p, bool reduce_content) {
  if (p.is_zero() || p.degree() < 1) throw PreconditionError("cascade_step requires degree >= 1");
  Polynomial d = derivative(p);
  if (!reduce_content) return {std::move(d), Rational(1)};
  Rational s = content(d);
  if (d.leading().sign() < 0) s = -s;
  return {d / s, s};
}

/// levels[0] is linear, levels.back() is the input; levels[i] has degree
/// i + 1 and levels[i] * scalings[i] == derivative(levels[i + 1]).
/// scalings.back() is 1.
struct CascadeChain {
  std::vector<Polynomial> levels;
  std::vector<Rational> scalings;

  std::size_t size() const { return levels.size(); }
  const Polynomial& top() const { return levels.back(); }
};

inline CascadeChain cascade_chain(const Polynomial& p, bool reduce_content = true) {
  if (p.is_zero() || p.degree() < 1) throw PreconditionError("cascade_chain requires degree >= 1");
  const auto n = static_cast<std::size_t>(p.degree());
  CascadeChain chain;
  chain.levels.resize(n);
  chain.scalings.resize(n, Rational(1));
  chain.levels[n - 1] = p;
  for (std::size_t i = n - 1; i > 0; --i) {
    auto step = cascade_step(chain.levels[i], reduce_content);
    chain.levels[i - 1] = std::move(step.poly);
    chain.scalings[i - 1] = std::move(step.scaling);
  }
  return chain;
}

/// Multiplies the coefficient of x^k by a0 + k*d. With (0, 1) this is x*p'(x),
/// which keeps every multiple root of p.
inline Polynomial hudde_transform(const Polynomial& p, const Rational& a0, const Rational& d) {
  const auto c = p.coefficients();
  std::vector<Rational> out(c.begin(), c.end());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] *= a0 + Rational(static_cast<long>(k)) * d;
  return Polynomial(std::move(out));
}

struct SquarefreeFactor {
  Polynomial factor;  // monic, squarefree
  int multiplicity = 0;
};

struct SquarefreeDecomposition {
  /// p / gcd(p, p') with positive leading coefficient.
  Polynomial squarefree;
  /// Pairwise coprime; p is lc(p) times the product of factor^multiplicity.
  std::vector<SquarefreeFactor> factors;

  /// Multiplicity of the factor vanishing at an exact rational point, 0 if none.
  int multiplicity_at(const Rational& x) const {
    for (const auto& f : factors)
      if (f.factor(x).is_zero()) return f.multiplicity;
    return 0;
  }
};

/// Yun's squarefree decomposition over Q.
inline SquarefreeDecomposition squarefree_part(const Polynomial& p) {
  if (p.is_zero() || p.degree() < 1) throw PreconditionError("squarefree_part requires degree >= 1");
  SquarefreeDecomposition out;
  const Polynomial dp = derivative(p);
  const Polynomial g = gcd(p, dp);
  out.squarefree = exact_quotient(p, g);
  if (out.squarefree.leading().sign() < 0) out.squarefree = -out.squarefree;

  Polynomial b = monic(out.squarefree);
  Polynomial c = exact_quotient(dp / p.leading(), g);
  Polynomial d = c - derivative(b);
  for (int i = 1; !b.is_constant(); ++i) {
    Polynomial a = gcd(b, d);
    if (!a.is_constant()) out.factors.push_back({a, i});
    b = exact_quotient(b, a);
    c = exact_quotient(d, a);
    d = c - derivative(b);
  }
  return out;
}

/// p(-x).
inline Polynomial reflect(const Polynomial& p) {
  const auto c = p.coefficients();
  std::vector<Rational> out(c.begin(), c.end());
  for (std::size_t k = 1; k < out.size(); k += 2) out[k] = -out[k];
  return Polynomial(std::move(out));
}

/// p(bound - x): a root r of p becomes bound - r.
inline Polynomial translate_from_bound(const Polynomial& p, const Rational& bound) {
  return compose(p, Polynomial{bound, Rational(-1)});
}

}  // namespace cascades
