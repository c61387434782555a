#pragma once

// JSON and plain-text renderings of library results, shared by the CLI and
// its tests. Every rational is emitted as {"num", "den", "decimal"} so the
// exact value is always present next to its rounded display.

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "cascades/bounds.hpp"
#include "cascades/cascade.hpp"
#include "cascades/certificate.hpp"
#include "cascades/certify.hpp"
#include "cascades/isolate.hpp"
#include "cascades/refine.hpp"
#include "cascades/replay.hpp"
#include "cascades/text.hpp"

namespace cascades {

inline constexpr const char* kVersion = "1.0.0";

namespace report {

using json = nlohmann::ordered_json;

inline json rational(const Rational& r, int digits) {
  return {{"num", r.num().get_str()}, {"den", r.den().get_str()}, {"decimal", to_decimal(r, digits)}};
}

inline json interval(const Rational& lo, const Rational& hi, int digits) {
  return {{"lo", rational(lo, digits)}, {"hi", rational(hi, digits)}};
}

inline json certificate(const SignCertificate& c, int digits) {
  return {{"lo", rational(c.lo, digits)},
          {"hi", rational(c.hi, digits)},
          {"f_lo", rational(c.f_lo, digits)},
          {"f_hi", rational(c.f_hi, digits)},
          {"conclusion", to_string(c.conclusion)}};
}

inline json root(const IsolatedRoot& r, int digits) {
  if (r.is_exact())
    return {{"kind", "exact"},
            {"value", rational(r.value, digits)},
            {"multiplicity", r.multiplicity},
            {"level", r.level}};
  return {{"kind", "bracketed"},
          {"lo", rational(r.certificate.lo, digits)},
          {"hi", rational(r.certificate.hi, digits)},
          {"multiplicity", r.multiplicity},
          {"level", r.level},
          {"certificate", certificate(r.certificate, digits)}};
}

inline json roots(const std::vector<IsolatedRoot>& rs, int digits) {
  json out = json::array();
  for (const auto& r : rs) out.push_back(root(r, digits));
  return out;
}

inline json bounds(const RootBounds& b, int digits) {
  json flags = json::array();
  for (auto f : b.flags) flags.push_back(to_string(f));
  return {{"small", rational(b.small, digits)},
          {"great", rational(b.great, digits)},
          {"newton", b.has_newton ? rational(b.newton, digits) : json(nullptr)},
          {"flags", flags}};
}

inline json chain(const Polynomial& input, const SquarefreeDecomposition& dec, const CascadeChain& c,
                  const std::vector<LevelRoots>& levels, int digits) {
  json out;
  out["squarefree"] = to_text(dec.squarefree);
  out["reduced"] = !(dec.squarefree == input);
  json ls = json::array();
  for (std::size_t i = 0; i < c.size(); ++i) {
    json coeffs = json::array();
    for (const auto& v : c.levels[i].coefficients()) coeffs.push_back(rational(v, digits));
    json rs = json::array();
    for (const auto& r : levels[i].roots) {
      if (r.exact)
        rs.push_back({{"kind", "exact"}, {"value", rational(r.lo, digits)}});
      else
        rs.push_back({{"kind", "bracketed"}, {"lo", rational(r.lo, digits)}, {"hi", rational(r.hi, digits)}});
    }
    ls.push_back({{"level", static_cast<int>(i) + 1},
                  {"polynomial", to_text(c.levels[i])},
                  {"coefficients", coeffs},
                  {"scaling", rational(c.scalings[i], digits)},
                  {"great", rational(levels[i].great, digits)},
                  {"positive_roots", rs}});
  }
  out["levels"] = ls;
  return out;
}

inline json approximation(const RootApproximation& a, int digits, bool with_trace) {
  json out = {{"method", to_string(a.method)},
              {"status", to_string(a.status)},
              {"iterations", a.iterations},
              {"enclosure", interval(a.lo, a.hi, digits)},
              {"width", rational(a.width(), digits)},
              {"estimate", rational(a.estimate(), digits)}};
  if (with_trace) {
    json steps = json::array();
    for (const auto& s : a.trace)
      steps.push_back({{"step", to_string(s.kind)}, {"lo", rational(s.lo, digits)}, {"hi", rational(s.hi, digits)}});
    out["trace"] = steps;
  }
  return out;
}

inline json interleaving(const InterleavingReport& r, int digits) {
  json gaps = json::array();
  for (const auto& g : r.gaps)
    gaps.push_back({{"left", g.left}, {"right", g.right}, {"count", g.count}, {"weighted", g.weighted}});
  return {{"valid", r.valid()},
          {"p_roots", roots(r.p_roots, digits)},
          {"dp_roots", roots(r.dp_roots, digits)},
          {"gaps", gaps},
          {"violations", r.violations},
          {"extremes", {{"below", r.dp_below}, {"above", r.dp_above}}}};
}

inline json replay(const ReplayResult& r, int digits) {
  json cascades = json::array();
  for (const auto& c : r.cascades)
    cascades.push_back({{"level", c.level},
                        {"computed", to_text(c.computed)},
                        {"expected", to_text(c.expected)},
                        {"scaling", rational(c.scaling, digits)},
                        {"proportional", c.proportional}});
  auto checks = [&](const std::vector<ValueCheck>& vs) {
    json out = json::array();
    for (const auto& v : vs)
      out.push_back({{"label", v.label},
                     {"computed", rational(v.computed, digits)},
                     {"expected", rational(v.expected, digits)},
                     {"match", v.match()}});
    return out;
  };
  json narrowing = json::array();
  for (const auto& c : r.narrowing) narrowing.push_back(certificate(c, digits));
  return {{"equation", to_text(r.equation)},
          {"cascades", cascades},
          {"great_hypotheses", checks(r.great_hypotheses)},
          {"sign_table", checks(r.sign_table)},
          {"narrowing", narrowing},
          {"roots", roots(r.roots, digits)},
          {"left_root_refinement", approximation(r.left_root_refinement, digits, false)},
          {"interleaving", interleaving(r.interleaving, digits)},
          {"mismatches", r.mismatches},
          {"ok", r.ok()}};
}

/// Envelope shared by every command. `input` is the canonical text of the
/// polynomial, or null for commands without one.
inline json envelope(const std::string& command, const std::optional<Polynomial>& input, json results,
                     double timing_ms) {
  return {{"command", command},
          {"input", input ? json(to_text(*input)) : json(nullptr)},
          {"results", std::move(results)},
          {"timing_ms", timing_ms},
          {"version", kVersion}};
}

// ---------------------------------------------------------------------------
// Plain text

inline std::string root_line(const IsolatedRoot& r, int digits) {
  std::ostringstream os;
  if (r.is_exact())
    os << "exact " << render_rational(r.value, digits);
  else
    os << "bracketed (" << r.certificate.lo << ", " << r.certificate.hi << ")  "
       << render_enclosure(r.certificate.lo, r.certificate.hi, digits);
  os << "  multiplicity " << r.multiplicity;
  return os.str();
}

inline std::string approximation_text(const RootApproximation& a, int digits, bool with_trace) {
  std::ostringstream os;
  os << "method: " << to_string(a.method) << "\n"
     << "status: " << to_string(a.status) << "\n"
     << "iterations: " << a.iterations << "\n"
     << "enclosure: [" << to_decimal(a.lo, digits) << ", " << to_decimal(a.hi, digits) << "]\n"
     << "estimate: " << render_enclosure(a.lo, a.hi, digits) << "\n";
  if (with_trace)
    for (const auto& s : a.trace)
      os << "  " << to_string(s.kind) << "  " << render_enclosure(s.lo, s.hi, digits) << "\n";
  return os.str();
}

inline std::string interleaving_text(const InterleavingReport& r, int digits) {
  std::ostringstream os;
  os << "roots of p:\n";
  for (const auto& x : r.p_roots) os << "  " << root_line(x, digits) << "\n";
  os << "roots of p':\n";
  for (const auto& x : r.dp_roots) os << "  " << root_line(x, digits) << "\n";
  for (const auto& g : r.gaps)
    os << "between roots " << g.left + 1 << " and " << g.right + 1 << " of p: " << g.count << " derivative roots (" << g.weighted
       << " with multiplicity)\n";
  os << "derivative roots below / above: " << r.dp_below << " / " << r.dp_above << "\n";
  if (r.valid()) os << "no violations\n";
  for (const auto& v : r.violations) os << "VIOLATION: " << v << "\n";
  return os.str();
}

inline std::string replay_text(const ReplayResult& r, int digits) {
  std::ostringstream os;
  os << "equation: " << to_text(r.equation) << " = 0\n";
  for (const auto& c : r.cascades)
    os << "cascade " << c.level << ": " << to_text(c.computed) << "  (Rolle: " << to_text(c.expected) << ", "
       << (c.proportional ? "same roots" : "MISMATCH") << ")\n";
  for (const auto& v : r.great_hypotheses)
    os << v.label << " = " << v.computed << (v.match() ? "" : "  MISMATCH, expected " + v.expected.str()) << "\n";
  for (const auto& v : r.sign_table)
    os << v.label << " = " << v.computed << (v.match() ? "" : "  MISMATCH, expected " + v.expected.str()) << "\n";
  for (const auto& c : r.narrowing) os << "f2 on (" << c.lo << ", " << c.hi << "): " << to_string(c.conclusion) << "\n";
  if (!r.roots.empty() && r.roots.front().is_exact()) os << "left root Exact " << r.roots.front().value << "\n";
  for (const auto& x : r.roots) os << "root: " << root_line(x, digits) << "\n";
  os << "6 - sqrt(3) by bisection: "
     << render_enclosure(r.left_root_refinement.lo, r.left_root_refinement.hi, digits) << " after "
     << r.left_root_refinement.iterations << " steps\n";
  os << interleaving_text(r.interleaving, digits);
  if (r.ok()) os << "replay: all values match\n";
  for (const auto& m : r.mismatches) os << "MISMATCH: " << m << "\n";
  return os.str();
}

}  // namespace report
}  // namespace cascades
