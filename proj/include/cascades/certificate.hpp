#pragma once

#include <string>

#include "cascades/errors.hpp"
#include "cascades/polynomial.hpp"

namespace cascades {

enum class Conclusion { SignChange, NoSignChange, ExactRootAtLo, ExactRootAtHi };

inline std::string to_string(Conclusion c) {
  switch (c) {
    case Conclusion::SignChange: return "sign_change";
    case Conclusion::NoSignChange: return "no_sign_change";
    case Conclusion::ExactRootAtLo: return "exact_root_at_lo";
    case Conclusion::ExactRootAtHi: return "exact_root_at_hi";
  }
  return "unknown";
}

/// Exact endpoint values of a polynomial on (lo, hi) and what they license.
/// SignChange means f_lo * f_hi < 0, so the open interval holds a root.
struct SignCertificate {
  Rational lo;
  Rational hi;
  Rational f_lo;
  Rational f_hi;
  Conclusion conclusion = Conclusion::NoSignChange;

  Rational width() const { return hi - lo; }

  /// Recomputes the endpoint values against p.
  bool holds_for(const Polynomial& p) const { return p(lo) == f_lo && p(hi) == f_hi; }

  friend bool operator==(const SignCertificate&, const SignCertificate&) = default;
};

inline SignCertificate sign_change(const Polynomial& p, const Rational& lo, const Rational& hi) {
  if (!(lo < hi)) throw PreconditionError("sign_change requires lo < hi");
  SignCertificate c{lo, hi, p(lo), p(hi), Conclusion::NoSignChange};
  if (c.f_lo.is_zero())
    c.conclusion = Conclusion::ExactRootAtLo;
  else if (c.f_hi.is_zero())
    c.conclusion = Conclusion::ExactRootAtHi;
  else if (c.f_lo.sign() != c.f_hi.sign())
    c.conclusion = Conclusion::SignChange;
  return c;
}

/// Keeps the half of (lo, hi) that still carries the sign change. A zero at
/// the probe comes back as ExactRootAtHi on (lo, probe).
inline SignCertificate narrow(const Polynomial& p, const SignCertificate& cert, const Rational& probe) {
  if (cert.conclusion != Conclusion::SignChange) throw PreconditionError("narrow requires a sign-change certificate");
  if (!(cert.lo < probe && probe < cert.hi)) throw PreconditionError("probe must lie strictly inside the interval");
  const Rational fp = p(probe);
  if (fp.is_zero()) return {cert.lo, probe, cert.f_lo, fp, Conclusion::ExactRootAtHi};
  if (fp.sign() != cert.f_lo.sign()) return {cert.lo, probe, cert.f_lo, fp, Conclusion::SignChange};
  return {probe, cert.hi, fp, cert.f_hi, Conclusion::SignChange};
}

/// A real root found by isolation: either an exact rational value or a
/// sign-change certificate on the squarefree part of the source polynomial
/// whose open interval contains exactly that one root.
struct IsolatedRoot {
  enum class Kind { Exact, Bracketed };

  Kind kind = Kind::Exact;
  Rational value;               // Exact only
  SignCertificate certificate;  // Bracketed only
  int multiplicity = 1;
  /// Degree of the cascade level the root belongs to.
  int level = 0;

  static IsolatedRoot exact(Rational v, int multiplicity, int level) {
    IsolatedRoot r;
    r.kind = Kind::Exact;
    r.value = std::move(v);
    r.multiplicity = multiplicity;
    r.level = level;
    return r;
  }

  static IsolatedRoot bracketed(SignCertificate c, int multiplicity, int level) {
    IsolatedRoot r;
    r.kind = Kind::Bracketed;
    r.certificate = std::move(c);
    r.multiplicity = multiplicity;
    r.level = level;
    return r;
  }

  bool is_exact() const { return kind == Kind::Exact; }
  const Rational& lower() const { return is_exact() ? value : certificate.lo; }
  const Rational& upper() const { return is_exact() ? value : certificate.hi; }

  /// For exact roots: equality. For brackets: strict containment.
  bool contains(const Rational& x) const {
    return is_exact() ? x == value : (certificate.lo < x && x < certificate.hi);
  }
};

}  // namespace cascades
