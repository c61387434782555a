#pragma once

// Refinement of a certified root: bisection, false position and Newton's
// tangent method, all in exact rational arithmetic.
//
// Secant and tangent iterates grow in size with every step, so once an
// iterate's denominator exceeds iterate_bits(tol) bits it is rounded to the
// nearest dyadic rational on that grid. Rounding only moves the next probe;
// every reported enclosure is re-checked by exact evaluation.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cascades/certificate.hpp"
#include "cascades/errors.hpp"
#include "cascades/isolate.hpp"
#include "cascades/polynomial.hpp"

namespace cascades {

/// Minimum dyadic grid (2^-256) for rounded iterates.
inline constexpr unsigned long kIterateBits = 256;

enum class Method { Bisection, FalsePosition, Newton, NewtonSafeguarded };
enum class Status { Converged, ExactRoot, MaxIterations };
enum class StepKind { Bisect, Secant, Tangent, SafeguardBisect, Probe };

inline std::string to_string(Method m) {
  switch (m) {
    case Method::Bisection: return "bisection";
    case Method::FalsePosition: return "false_position";
    case Method::Newton: return "newton";
    case Method::NewtonSafeguarded: return "newton_safeguarded";
  }
  return "unknown";
}

inline std::string to_string(Status s) {
  switch (s) {
    case Status::Converged: return "converged";
    case Status::ExactRoot: return "exact_root";
    case Status::MaxIterations: return "max_iterations";
  }
  return "unknown";
}

inline std::string to_string(StepKind k) {
  switch (k) {
    case StepKind::Bisect: return "bisect";
    case StepKind::Secant: return "secant";
    case StepKind::Tangent: return "tangent";
    case StepKind::SafeguardBisect: return "safeguard_bisect";
    case StepKind::Probe: return "probe";
  }
  return "unknown";
}

struct TraceStep {
  StepKind kind;
  /// Iterate (lo == hi) or enclosure after the step.
  Rational lo;
  Rational hi;
};

struct RootApproximation {
  Rational lo;
  Rational hi;
  std::size_t iterations = 0;
  Method method = Method::Bisection;
  Status status = Status::Converged;
  std::vector<TraceStep> trace;

  bool exact() const { return status == Status::ExactRoot; }
  Rational width() const { return hi - lo; }
  Rational estimate() const { return midpoint(lo, hi); }
};

namespace detail {

inline void require_sign_change(const Polynomial& p, const SignCertificate& cert) {
  if (cert.conclusion != Conclusion::SignChange) throw PreconditionError("refinement requires a sign-change certificate");
  if (!cert.holds_for(p)) throw PreconditionError("certificate does not match the polynomial");
}

inline void require_positive(const Rational& tol) {
  if (tol.sign() <= 0) throw PreconditionError("tolerance must be positive");
}

inline unsigned long iterate_bits(const Rational& tol) {
  // bits of 1/tol plus headroom
  const Integer inv = ceil(Rational(1) / tol);
  const auto needed = static_cast<unsigned long>(mpz_sizeinbase(inv.get_mpz_t(), 2)) + 16;
  return std::max(kIterateBits, needed);
}

inline Rational round_iterate(const Rational& x, unsigned long bits) {
  return denominator_bits(x) > bits ? dyadic_round(x, bits) : x;
}

inline RootApproximation exact_at(const Rational& x, std::size_t iterations, Method m, std::vector<TraceStep> trace) {
  return {x, x, iterations, m, Status::ExactRoot, std::move(trace)};
}

/// Tests the single candidate k/L nearest x, L the leading coefficient of the
/// primitive part: the only shape a rational root can take.
inline bool is_rational_root_near(const Polynomial& primitive, const Rational& x, Rational& root) {
  const Rational lead = primitive.leading();
  const Rational candidate = Rational(floor(x * lead + Rational(Integer(1), Integer(2)))) / lead;
  if (!primitive(candidate).is_zero()) return false;
  root = candidate;
  return true;
}

}  // namespace detail

/// Bolzano bisection: exact midpoint sign tests until hi - lo <= tol or a
/// midpoint is a root. After k steps the width is exactly w0 / 2^k.
inline RootApproximation bisect(const Polynomial& p, const SignCertificate& cert, const Rational& tol,
                                bool keep_trace = false) {
  detail::require_sign_change(p, cert);
  detail::require_positive(tol);
  RootApproximation out{cert.lo, cert.hi, 0, Method::Bisection, Status::Converged, {}};
  const int sign_lo = cert.f_lo.sign();
  while (out.width() > tol) {
    const Rational mid = midpoint(out.lo, out.hi);
    ++out.iterations;
    const int s = p(mid).sign();
    if (s == 0) return detail::exact_at(mid, out.iterations, out.method, std::move(out.trace));
    (s == sign_lo ? out.lo : out.hi) = mid;
    if (keep_trace) out.trace.push_back({StepKind::Bisect, out.lo, out.hi});
  }
  return out;
}

/// Method of false position with the usual endpoint retention.
///
/// When one endpoint stays fixed the bracket never shrinks to zero width, so
/// once an iterate moves by at most tol the point tol further toward the
/// fixed endpoint is probed; a sign change there closes the bracket to
/// width tol. Each secant point is also tested against the one rational
/// candidate near it. Exhausting max_iter is reported as
/// Status::MaxIterations.
inline RootApproximation false_position(const Polynomial& p, const SignCertificate& cert, const Rational& tol,
                                        std::size_t max_iter, bool keep_trace = false) {
  detail::require_sign_change(p, cert);
  detail::require_positive(tol);
  if (max_iter == 0) throw PreconditionError("max_iter must be positive");
  const unsigned long bits = detail::iterate_bits(tol);
  const Polynomial prim = primitive_part(p);
  RootApproximation out{cert.lo, cert.hi, 0, Method::FalsePosition, Status::Converged, {}};
  Rational f_lo = cert.f_lo;
  Rational f_hi = cert.f_hi;
  std::optional<Rational> previous;

  // Keeps the half of the bracket with the sign change; true on an exact hit.
  auto take = [&](const Rational& x, bool& moved_lo) {
    const Rational fx = p(x);
    if (fx.is_zero()) return true;
    moved_lo = fx.sign() == f_lo.sign();
    if (moved_lo) {
      out.lo = x;
      f_lo = fx;
    } else {
      out.hi = x;
      f_hi = fx;
    }
    return false;
  };

  while (out.width() > tol) {
    if (out.iterations == max_iter) {
      out.status = Status::MaxIterations;
      return out;
    }
    ++out.iterations;
    Rational x = detail::round_iterate((out.lo * f_hi - out.hi * f_lo) / (f_hi - f_lo), bits);
    if (!(out.lo < x && x < out.hi)) x = midpoint(out.lo, out.hi);
    if (Rational root; detail::is_rational_root_near(prim, x, root) && out.lo <= root && root <= out.hi)
      return detail::exact_at(root, out.iterations, out.method, std::move(out.trace));
    bool moved_lo = false;
    if (take(x, moved_lo)) return detail::exact_at(x, out.iterations, out.method, std::move(out.trace));
    if (keep_trace) out.trace.push_back({StepKind::Secant, out.lo, out.hi});

    if (previous && abs(x - *previous) <= tol) {
      const Rational probe = moved_lo ? x + tol : x - tol;
      if (out.lo < probe && probe < out.hi) {
        if (take(probe, moved_lo)) return detail::exact_at(probe, out.iterations, out.method, std::move(out.trace));
        if (keep_trace) out.trace.push_back({StepKind::Probe, out.lo, out.hi});
      }
    }
    previous = x;
  }
  return out;
}

/// Newton's tangent iteration x <- x - p(x)/p'(x).
///
/// Converged means a step of at most tol followed by a sign change of p on
/// [x - tol/2, x + tol/2]. Each iterate is also tested against the one
/// rational candidate near it, so rational roots end as ExactRoot.
///
/// With a safeguard certificate the iteration keeps that bracket updated
/// and replaces any step that would leave it (or a vanishing derivative)
/// by a bisection step. Without one, p'(x) = 0 throws DerivativeVanished.
inline RootApproximation newton_refine(const Polynomial& p, const Rational& x0, const Rational& tol,
                                       std::size_t max_iter,
                                       const std::optional<SignCertificate>& safeguard = std::nullopt,
                                       bool keep_trace = false) {
  detail::require_positive(tol);
  if (p.is_zero() || p.degree() < 1) throw PreconditionError("newton_refine requires degree >= 1");
  if (max_iter == 0) throw PreconditionError("max_iter must be positive");
  if (safeguard) detail::require_sign_change(p, *safeguard);

  const Method method = safeguard ? Method::NewtonSafeguarded : Method::Newton;
  const Polynomial dp = derivative(p);
  const Polynomial prim = primitive_part(p);
  const unsigned long bits = detail::iterate_bits(tol);
  const Rational half_tol = tol / Rational(2);

  Rational lo = safeguard ? safeguard->lo : Rational();
  Rational hi = safeguard ? safeguard->hi : Rational();
  const int sign_lo = safeguard ? safeguard->f_lo.sign() : 0;

  std::vector<TraceStep> trace;
  Rational x = x0;
  if (safeguard && !(lo < x && x < hi)) x = midpoint(lo, hi);

  for (std::size_t iter = 1; iter <= max_iter; ++iter) {
    const Rational fx = p(x);
    if (fx.is_zero()) return detail::exact_at(x, iter - 1, method, std::move(trace));
    if (Rational root; detail::is_rational_root_near(prim, x, root) && (!safeguard || (lo <= root && root <= hi)))
      return detail::exact_at(root, iter - 1, method, std::move(trace));
    if (safeguard) (fx.sign() == sign_lo ? lo : hi) = x;

    const Rational slope = dp(x);
    Rational next;
    StepKind kind = StepKind::Tangent;
    if (slope.is_zero()) {
      if (!safeguard) throw DerivativeVanished("derivative vanished at iterate " + x.str());
      next = midpoint(lo, hi);
      kind = StepKind::SafeguardBisect;
    } else {
      next = detail::round_iterate(x - fx / slope, bits);
      if (safeguard && !(lo < next && next < hi)) {
        next = midpoint(lo, hi);
        kind = StepKind::SafeguardBisect;
      }
    }
    if (keep_trace) trace.push_back({kind, next, next});

    const bool small_step = abs(next - x) <= tol;
    x = std::move(next);
    if (safeguard && hi - lo <= tol) {
      // bracket itself is tight enough
      RootApproximation out{lo, hi, iter, method, Status::Converged, std::move(trace)};
      return out;
    }
    if (small_step) {
      const Rational a = x - half_tol;
      const Rational b = x + half_tol;
      const Rational fa = p(a);
      const Rational fb = p(b);
      if (fa.is_zero()) return detail::exact_at(a, iter, method, std::move(trace));
      if (fb.is_zero()) return detail::exact_at(b, iter, method, std::move(trace));
      if (fa.sign() != fb.sign()) return {a, b, iter, method, Status::Converged, std::move(trace)};
    }
  }
  if (safeguard) return {lo, hi, max_iter, method, Status::MaxIterations, std::move(trace)};
  return {x, x, max_iter, method, Status::MaxIterations, std::move(trace)};
}

struct IntermediateSolution {
  /// Roots of p - b strictly inside (lo, hi).
  std::vector<IsolatedRoot> roots;
  /// Solutions on the endpoints; the interval is open so they are only flagged.
  std::vector<Rational> boundary_roots;
};

/// Solves p(x) = b on (lo, hi) for b between p(lo) and p(hi). Bolzano's
/// two-function form f(x) = g(x) is this with p = f - g and b = 0.
inline IntermediateSolution solve_intermediate(const Polynomial& p, const Rational& b, const Rational& lo,
                                               const Rational& hi) {
  if (!(lo < hi)) throw PreconditionError("solve_intermediate requires lo < hi");
  const Rational f_lo = p(lo);
  const Rational f_hi = p(hi);
  if (b < std::min(f_lo, f_hi) || b > std::max(f_lo, f_hi))
    throw PreconditionError("value " + b.str() + " is not between p(lo) = " + f_lo.str() + " and p(hi) = " +
                            f_hi.str());
  const Polynomial shifted = p - Polynomial::constant(b);
  if (shifted.is_zero()) throw PreconditionError("p is constantly equal to b");
  auto found = isolate_in_interval(shifted, lo, hi);
  return {std::move(found.roots), std::move(found.boundary_roots)};
}

}  // namespace cascades
