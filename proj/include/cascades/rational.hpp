#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace cascades {

/// Arbitrary-precision integer used for numerators, denominators and contents.
using Integer = mpz_class;

/// Exact fraction in canonical form: the denominator is positive and
/// coprime to the numerator after every operation.
///
/// Thin value wrapper over GMP's mpq_class. It hides the expression
/// templates so that `auto` and overload resolution behave like any other
/// regular type.
class Rational {
 public:
  Rational() = default;
  Rational(int v) : q_(v) {}                      // NOLINT(google-explicit-constructor)
  Rational(long v) : q_(v) {}                     // NOLINT(google-explicit-constructor)
  Rational(long long v) : q_(Integer(std::to_string(v))) {}  // NOLINT
  Rational(const Integer& v) : q_(v) {}           // NOLINT(google-explicit-constructor)

  Rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
  }

  explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  /// Parses "a" or "a/b" with optional sign. Throws std::invalid_argument.
  static Rational from_string(std::string_view text) {
    const std::string s(text);
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("malformed rational literal '" + s + "'");
    if (q.get_den() == 0) throw std::domain_error("rational with zero denominator");
    q.canonicalize();
    return Rational(std::move(q));
  }

  Integer num() const { return q_.get_num(); }
  Integer den() const { return q_.get_den(); }
  const mpq_class& raw() const { return q_; }

  int sign() const { return sgn(q_); }
  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }

  std::string str() const { return q_.get_str(10); }
  double to_double() const { return q_.get_d(); }

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("division by zero rational");
    q_ /= o.q_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  mpq_class q_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

inline Rational midpoint(const Rational& a, const Rational& b) { return (a + b) / Rational(2); }

/// 2^e as a rational, e may be negative.
inline Rational pow2(long e) {
  Integer p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(e < 0 ? -e : e));
  return e < 0 ? Rational(Integer(1), p) : Rational(p);
}

inline Rational pow(const Rational& base, unsigned long e) {
  Integer n, d;
  mpz_pow_ui(n.get_mpz_t(), base.num().get_mpz_t(), e);
  mpz_pow_ui(d.get_mpz_t(), base.den().get_mpz_t(), e);
  return Rational(n, d);
}

inline Integer floor(const Rational& r) {
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), r.num().get_mpz_t(), r.den().get_mpz_t());
  return out;
}

inline Integer ceil(const Rational& r) {
  Integer out;
  mpz_cdiv_q(out.get_mpz_t(), r.num().get_mpz_t(), r.den().get_mpz_t());
  return out;
}

/// Bit length of the denominator; used to decide when iterates need rounding.
inline std::size_t denominator_bits(const Rational& r) {
  return mpz_sizeinbase(r.den().get_mpz_t(), 2);
}

/// Smallest n / 2^bits that is >= r.
inline Rational dyadic_ceil(const Rational& r, unsigned long bits) {
  const Rational scale = pow2(static_cast<long>(bits));
  return Rational(ceil(r * scale)) / scale;
}

/// Nearest n / 2^bits to r (ties away from the floor are irrelevant here).
inline Rational dyadic_round(const Rational& r, unsigned long bits) {
  const Rational scale = pow2(static_cast<long>(bits));
  return Rational(floor(r * scale + Rational(Integer(1), Integer(2)))) / scale;
}

/// Smallest n / 2^bits with (n / 2^bits)^2 >= s, for s >= 0.
inline Rational sqrt_upper(const Rational& s, unsigned long bits) {
  if (s.sign() < 0) throw std::domain_error("sqrt_upper of a negative rational");
  // n^2 >= s * 4^bits  <=>  n^2 * den >= num'
  const Rational scaled = s * pow2(2 * static_cast<long>(bits));
  const Integer a = scaled.num();
  const Integer b = scaled.den();
  Integer n;
  Integer quotient = a / b;
  mpz_sqrt(n.get_mpz_t(), quotient.get_mpz_t());
  while (n * n * b < a) ++n;
  return Rational(n) / pow2(static_cast<long>(bits));
}

}  // namespace cascades

template <>
struct std::hash<cascades::Rational> {
  std::size_t operator()(const cascades::Rational& r) const noexcept {
    return std::hash<std::string>{}(r.str());
  }
};
