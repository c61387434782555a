#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "cascades/errors.hpp"
#include "cascades/rational.hpp"

namespace cascades {

/// Dense univariate polynomial over the rationals.
///
/// coefficients()[k] multiplies x^k. Trailing zeros are always trimmed, so
/// the zero polynomial is the empty sequence and has no degree.
class Polynomial {
 public:
  Polynomial() = default;

  explicit Polynomial(std::vector<Rational> coefficients) : c_(std::move(coefficients)) { trim(); }

  /// Constant-first, as in Polynomial{473, -648, 198, -24, 1}.
  Polynomial(std::initializer_list<Rational> coefficients) : c_(coefficients) { trim(); }

  static Polynomial constant(const Rational& c) { return Polynomial(std::vector<Rational>{c}); }

  static Polynomial monomial(const Rational& c, std::size_t exponent) {
    std::vector<Rational> v(exponent + 1);
    v[exponent] = c;
    return Polynomial(std::move(v));
  }

  /// (x - r)
  static Polynomial linear_factor(const Rational& r) { return Polynomial{-r, Rational(1)}; }

  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }

  int degree() const {
    if (c_.empty()) throw PreconditionError("degree of the zero polynomial is undefined");
    return static_cast<int>(c_.size()) - 1;
  }

  std::span<const Rational> coefficients() const { return c_; }

  /// Coefficient of x^k; zero past the degree.
  Rational operator[](std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }

  const Rational& leading() const {
    if (c_.empty()) throw PreconditionError("zero polynomial has no leading coefficient");
    return c_.back();
  }

  /// Exact Horner evaluation; the zero polynomial evaluates to 0.
  Rational operator()(const Rational& x) const {
    Rational acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
      acc *= x;
      acc += *it;
    }
    return acc;
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
  }

  Polynomial& operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
  }

  Polynomial& operator*=(const Rational& s) {
    if (s.is_zero()) {
      c_.clear();
      return *this;
    }
    for (auto& v : c_) v *= s;
    return *this;
  }

  Polynomial& operator/=(const Rational& s) {
    for (auto& v : c_) v /= s;
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
  friend Polynomial operator/(Polynomial a, const Rational& s) { return a /= s; }
  friend Polynomial operator-(Polynomial a) { return a *= Rational(-1); }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> out(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    }
    return Polynomial(std::move(out));
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  std::vector<Rational> c_;
};

/// Quotient and remainder of Euclidean division over Q.
inline std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw PreconditionError("polynomial division by zero");
  if (a.is_zero() || a.degree() < b.degree()) return {Polynomial{}, a};
  const int db = b.degree();
  std::vector<Rational> rem(a.coefficients().begin(), a.coefficients().end());
  std::vector<Rational> quo(static_cast<std::size_t>(a.degree() - db + 1));
  const Rational& lead = b.leading();
  for (int k = a.degree(); k >= db; --k) {
    const Rational factor = rem[static_cast<std::size_t>(k)] / lead;
    if (factor.is_zero()) continue;
    quo[static_cast<std::size_t>(k - db)] = factor;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k - db + j)] -= factor * b[static_cast<std::size_t>(j)];
  }
  rem.resize(static_cast<std::size_t>(db));
  return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
}

/// Exact division; throws if b does not divide a.
inline Polynomial exact_quotient(const Polynomial& a, const Polynomial& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw PreconditionError("polynomial division is not exact");
  return q;
}

inline Polynomial monic(const Polynomial& p) {
  if (p.is_zero()) return p;
  return p / p.leading();
}

/// Formal derivative; the derivative of a constant is the zero polynomial.
inline Polynomial derivative(const Polynomial& p) {
  if (p.is_zero()) throw PreconditionError("derivative of the zero polynomial");
  const auto c = p.coefficients();
  std::vector<Rational> out;
  out.reserve(c.size());
  for (std::size_t k = 1; k < c.size(); ++k) out.push_back(c[k] * Rational(static_cast<long>(k)));
  return Polynomial(std::move(out));
}

/// Monic gcd by the Euclidean algorithm over Q. gcd(0, 0) = 0.
inline Polynomial gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

/// Positive rational c such that p / c has coprime integer coefficients.
inline Rational content(const Polynomial& p) {
  if (p.is_zero()) return Rational(1);
  Integer g = 0;
  Integer l = 1;
  for (const auto& v : p.coefficients()) {
    if (v.is_zero()) continue;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.num().get_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.den().get_mpz_t());
  }
  return Rational(g, l);
}

/// p divided by its content and sign-normalized so the leading coefficient
/// is a positive integer.
inline Polynomial primitive_part(const Polynomial& p) {
  if (p.is_zero()) return p;
  Rational c = content(p);
  if (p.leading().sign() < 0) c = -c;
  return p / c;
}

/// p(q(x)) by Horner's scheme over polynomials.
inline Polynomial compose(const Polynomial& p, const Polynomial& q) {
  Polynomial acc;
  const auto c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * q + Polynomial::constant(*it);
  return acc;
}

inline Polynomial from_roots(std::span<const Rational> roots, const Rational& lead = Rational(1)) {
  Polynomial acc = Polynomial::constant(lead);
  for (const auto& r : roots) acc = acc * Polynomial::linear_factor(r);
  return acc;
}

}  // namespace cascades
