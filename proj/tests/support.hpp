#pragma once

// Fixed-seed generators and independent oracles shared by the test suites.

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "cascades/cascades.hpp"

namespace cascades::fixtures {

using Rng = std::mt19937_64;

inline long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

inline Rational random_rational(Rng& rng, long max_num, long max_den) {
  return Rational(Integer(uniform(rng, -max_num, max_num)), Integer(uniform(rng, 1, max_den)));
}

/// n distinct rationals, ascending.
inline std::vector<Rational> distinct_rationals(Rng& rng, std::size_t n, long max_num, long max_den) {
  std::set<Rational> seen;
  while (seen.size() < n) seen.insert(random_rational(rng, max_num, max_den));
  return {seen.begin(), seen.end()};
}

/// Integer coefficients in [-bound, bound], nonzero leading coefficient.
inline Polynomial random_integer_poly(Rng& rng, std::size_t degree, long bound) {
  std::vector<Rational> c(degree + 1);
  for (auto& v : c) v = Rational(uniform(rng, -bound, bound));
  while (c.back().is_zero()) c.back() = Rational(uniform(rng, -bound, bound));
  return Polynomial(std::move(c));
}

/// Rational coefficients, possibly with zeros below the leading term.
inline Polynomial random_rational_poly(Rng& rng, std::size_t degree, long max_num, long max_den) {
  std::vector<Rational> c(degree + 1);
  for (auto& v : c) v = uniform(rng, 0, 3) == 0 ? Rational(0) : random_rational(rng, max_num, max_den);
  while (c.back().is_zero()) c.back() = random_rational(rng, max_num, max_den);
  return Polynomial(std::move(c));
}

struct Constructed {
  Polynomial p;
  std::vector<Rational> roots;  // ascending, distinct, the rational roots of p
  long square_of_irrational = 0;  // m when +-sqrt(m) are also roots
};

/// Product of distinct rational linear factors times a random nonzero
/// leading coefficient.
inline Constructed all_real_rooted(Rng& rng, std::size_t degree, long max_num = 40, long max_den = 6) {
  Constructed c;
  c.roots = distinct_rationals(rng, degree, max_num, max_den);
  Rational lead = random_rational(rng, 9, 4);
  while (lead.is_zero()) lead = random_rational(rng, 9, 4);
  c.p = from_roots(c.roots, lead);
  return c;
}

/// Distinct rational roots plus irrational real pairs (x^2 - m, m not a
/// square) and a complex pair (x^2 + k).
inline Constructed mixed_roots(Rng& rng, std::size_t rational_count) {
  Constructed c = all_real_rooted(rng, rational_count, 20, 3);
  static const long nonsquares[] = {2, 3, 5, 6, 7, 8, 10, 11};
  const long m = nonsquares[uniform(rng, 0, 7)];
  c.p = c.p * Polynomial{-m, 0, 1} * Polynomial{uniform(rng, 1, 9), 0, 1};
  c.square_of_irrational = m;
  return c;
}

/// Term-by-term evaluation with explicit powers; shares no code with
/// Polynomial::operator().
inline Rational naive_eval(const Polynomial& p, const Rational& x) {
  Rational sum;
  const auto c = p.coefficients();
  for (std::size_t k = 0; k < c.size(); ++k) sum += c[k] * pow(x, static_cast<unsigned long>(k));
  return sum;
}

/// Cauchy bound 1 + max |a_i / a_n| on the magnitude of every root.
inline Rational cauchy_bound(const Polynomial& p) {
  Rational m;
  const auto c = p.coefficients();
  for (std::size_t i = 0; i + 1 < c.size(); ++i) m = std::max(m, abs(c[i] / c.back()));
  return m + Rational(1);
}

/// Whether the value lies in the closed hull of an isolated root.
inline bool inside(const IsolatedRoot& r, const Rational& x) {
  return r.is_exact() ? r.value == x : r.certificate.lo < x && x < r.certificate.hi;
}

/// Sylvester matrix determinant by fraction-exact Gaussian elimination.
inline Rational resultant(const Polynomial& a, const Polynomial& b) {
  const std::size_t m = static_cast<std::size_t>(a.degree());
  const std::size_t n = static_cast<std::size_t>(b.degree());
  const std::size_t size = m + n;
  std::vector<std::vector<Rational>> s(size, std::vector<Rational>(size));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k <= m; ++k) s[r][r + k] = a[m - k];
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t k = 0; k <= n; ++k) s[n + r][r + k] = b[n - k];
  Rational det(1);
  for (std::size_t col = 0; col < size; ++col) {
    std::size_t pivot = col;
    while (pivot < size && s[pivot][col].is_zero()) ++pivot;
    if (pivot == size) return Rational(0);
    if (pivot != col) {
      std::swap(s[pivot], s[col]);
      det = -det;
    }
    det *= s[col][col];
    for (std::size_t r = col + 1; r < size; ++r) {
      if (s[r][col].is_zero()) continue;
      const Rational f = s[r][col] / s[col][col];
      for (std::size_t k = col; k < size; ++k) s[r][k] -= f * s[col][k];
    }
  }
  return det;
}

}  // namespace cascades::fixtures
