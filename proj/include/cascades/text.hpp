#pragma once

// Text forms of rationals and polynomials.
//
// Polynomial grammar, whitespace-insensitive:
//   list  := rational (',' rational)*            constant coefficient first
//   human := term (('+' | '-') term)*
//   term  := ['+' | '-'] [coef] ['*'] ['x' ['^' exponent]]
//   coef  := digits ['/' digits]
// Repeated exponents are summed. The canonical form is the human syntax with
// descending exponents, e.g. "x^4 - 24x^3 + 198x^2 - 648x + 473".

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "cascades/errors.hpp"
#include "cascades/polynomial.hpp"
#include "cascades/rational.hpp"

namespace cascades {

namespace detail {

class Cursor {
 public:
  Cursor(std::string_view text, std::size_t offset = 0) : text_(text), offset_(offset) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() {
    skip_space();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  bool at_digit() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }
  std::string digits() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }
  std::size_t position() const { return offset_ + pos_; }
  [[noreturn]] void fail(const std::string& what) { throw ParseError(what, position()); }

 private:
  std::string_view text_;
  std::size_t offset_;
  std::size_t pos_ = 0;
};

/// Integer, fraction "a/b", decimal "1.25" or scientific "1e-20", signed.
inline Rational parse_rational_at(std::string_view text, std::size_t offset) {
  Cursor cur(text, offset);
  int sign = 1;
  if (cur.accept('-'))
    sign = -1;
  else
    cur.accept('+');
  std::string whole = cur.digits();
  std::string frac;
  if (cur.accept('.')) frac = cur.digits();
  if (whole.empty() && frac.empty()) cur.fail("expected a number");
  Rational value(Integer(whole.empty() ? "0" : whole));
  if (!frac.empty()) value += Rational(Integer(frac), Integer("1" + std::string(frac.size(), '0')));
  if (cur.accept('e') || cur.accept('E')) {
    int esign = 1;
    if (cur.accept('-'))
      esign = -1;
    else
      cur.accept('+');
    const std::string e = cur.digits();
    if (e.empty()) cur.fail("expected an exponent");
    if (e.size() > 6) cur.fail("exponent too large");
    const Rational scale = pow(Rational(10), std::stoul(e));
    value = esign > 0 ? value * scale : value / scale;
  } else if (frac.empty() && cur.accept('/')) {
    cur.skip_space();
    const std::size_t at = cur.position();
    const std::string den = cur.digits();
    if (den.empty()) cur.fail("expected a denominator");
    if (Integer(den) == 0) throw ParseError("zero denominator", at);
    const Integer d(den);
    value /= Rational(d);
  }
  if (!cur.done()) cur.fail("unexpected character");
  return sign < 0 ? -value : value;
}

inline std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

inline Polynomial parse_coefficient_list(std::string_view text) {
  std::vector<Rational> coeffs;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = text.find(',', start);
    const std::string_view field = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    std::size_t lead = 0;
    while (lead < field.size() && std::isspace(static_cast<unsigned char>(field[lead]))) ++lead;
    if (trim(field).empty()) throw ParseError("empty coefficient", start + lead);
    coeffs.push_back(parse_rational_at(field, start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return Polynomial(std::move(coeffs));
}

inline Polynomial parse_human(std::string_view text) {
  Cursor cur(text);
  std::map<std::size_t, Rational> terms;
  bool first = true;
  while (!cur.done()) {
    int sign = 1;
    if (cur.accept('-')) {
      sign = -1;
    } else if (!cur.accept('+') && !first) {
      cur.fail("expected '+' or '-' between terms");
    }
    first = false;

    bool has_coef = false;
    Rational coef(1);
    if (cur.at_digit()) {
      has_coef = true;
      coef = Rational(Integer(cur.digits()));
      if (cur.accept('/')) {
        if (!cur.at_digit()) cur.fail("expected a denominator");
        const std::size_t at = cur.position();
        const Integer den(cur.digits());
        if (den == 0) throw ParseError("zero denominator", at);
        coef /= Rational(den);
      }
      if (cur.peek() == '.') cur.fail("decimal coefficients are not supported; use a fraction");
    }
    const bool star = cur.accept('*');
    std::size_t exponent = 0;
    if (cur.accept('x')) {
      exponent = 1;
      if (cur.accept('^')) {
        if (cur.peek() == '-' || !cur.at_digit()) cur.fail("exponent must be a non-negative integer");
        const std::string e = cur.digits();
        if (cur.peek() == '.' || cur.peek() == '/') cur.fail("exponent must be a non-negative integer");
        if (e.size() > 6) cur.fail("exponent too large");
        exponent = std::stoul(e);
      }
    } else if (star || !has_coef) {
      cur.fail(cur.done() ? "unexpected end of input" : "malformed term");
    }
    terms[exponent] += sign < 0 ? -coef : coef;
  }
  std::vector<Rational> coeffs(terms.empty() ? 0 : terms.rbegin()->first + 1);
  for (const auto& [e, c] : terms) coeffs[e] = c;
  return Polynomial(std::move(coeffs));
}

}  // namespace detail

inline Rational parse_rational(std::string_view text) {
  if (detail::trim(text).empty()) throw ParseError("empty number", 0);
  return detail::parse_rational_at(text, 0);
}

/// Accepts a constant-first coefficient list or human syntax. The zero
/// polynomial ("0") parses; empty input does not.
inline Polynomial parse_polynomial(std::string_view text) {
  if (detail::trim(text).empty()) throw ParseError("empty polynomial", 0);
  if (text.find(',') != std::string_view::npos) return detail::parse_coefficient_list(text);
  return detail::parse_human(text);
}

/// Canonical human form, descending exponents.
inline std::string to_text(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  const auto c = p.coefficients();
  for (std::size_t k = c.size(); k-- > 0;) {
    if (c[k].is_zero()) continue;
    const bool negative = c[k].sign() < 0;
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    const Rational mag = abs(c[k]);
    if (k == 0 || mag != Rational(1)) out += mag.str();
    if (k >= 1) out += "x";
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

/// Round-half-to-even decimal with exactly `digits` fractional digits.
inline std::string to_decimal(const Rational& r, int digits) {
  if (digits < 0) throw PreconditionError("digits must be non-negative");
  const Rational scale = pow(Rational(10), static_cast<unsigned long>(digits));
  const Rational scaled = abs(r) * scale;
  Integer n = floor(scaled);
  const Rational frac = scaled - Rational(n);
  const Rational half(Integer(1), Integer(2));
  if (frac > half || (frac == half && mpz_odd_p(n.get_mpz_t()))) ++n;
  std::string s = n.get_str();
  if (digits > 0) {
    if (s.size() <= static_cast<std::size_t>(digits)) s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
    s.insert(s.size() - static_cast<std::size_t>(digits), ".");
  }
  const bool negative = r.sign() < 0 && n != 0;
  return negative ? "-" + s : s;
}

/// Number of fractional digits of r's decimal expansion, or -1 if it does
/// not terminate.
inline int terminating_digits(const Rational& r) {
  Integer d = r.den();
  int twos = 0, fives = 0;
  while (mpz_divisible_ui_p(d.get_mpz_t(), 2)) {
    d /= 2;
    ++twos;
  }
  while (mpz_divisible_ui_p(d.get_mpz_t(), 5)) {
    d /= 5;
    ++fives;
  }
  if (d != 1) return -1;
  return std::max(twos, fives);
}

/// "num/den ≈ decimal" (or "= decimal" when the expansion terminates within
/// `digits`); integers render bare.
inline std::string render_rational(const Rational& r, int digits) {
  if (digits < 1) throw PreconditionError("digits must be at least 1");
  if (r.is_integer()) return r.str();
  const int t = terminating_digits(r);
  if (t >= 0 && t <= digits) return r.str() + " = " + to_decimal(r, t);
  return r.str() + " ≈ " + to_decimal(r, digits);
}

/// Positive r rounded up to two significant digits, "5.0e-7".
inline std::string scientific_upper(const Rational& r) {
  if (r.sign() <= 0) return "0";
  int e = 0;
  Rational m = r;
  while (m >= Rational(10)) {
    m /= Rational(10);
    ++e;
  }
  while (m < Rational(1)) {
    m *= Rational(10);
    --e;
  }
  Integer tenths = ceil(m * Rational(10));
  if (tenths == 100) {
    tenths = 10;
    ++e;
  }
  const std::string t = tenths.get_str();
  return t.substr(0, 1) + "." + t.substr(1) + "e" + std::to_string(e);
}

/// Midpoint and half-width of [lo, hi]: "4.26794919243 ± 5.0e-13".
inline std::string render_enclosure(const Rational& lo, const Rational& hi, int digits) {
  if (lo == hi) return render_rational(lo, digits);
  return to_decimal(midpoint(lo, hi), digits) + " ± " + scientific_upper((hi - lo) / Rational(2));
}

}  // namespace cascades
