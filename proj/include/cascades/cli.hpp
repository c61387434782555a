#pragma once

// Command-line front end. run_cli() takes the arguments after the program
// name and writes to the given streams, so tests drive it in-process.
//
// Exit codes: 0 success, 1 usage or parse error, 2 precondition violation,
// 3 replay or certify mismatch.

#include <algorithm>
#include <chrono>
#include <iostream>
#include <iterator>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"

#include "cascades/cascades.hpp"
#include "cascades/replay.hpp"
#include "cascades/report.hpp"

namespace cascades {

enum ExitCode : int { kExitOk = 0, kExitUsage = 1, kExitPrecondition = 2, kExitMismatch = 3 };

namespace detail {

inline Polynomial read_polynomial(const std::string& arg, std::istream& in) {
  if (arg != "-") return parse_polynomial(arg);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return parse_polynomial(text);
}

inline std::pair<Rational, Rational> parse_interval(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw ParseError("interval must be 'lo,hi'", 0);
  Rational lo = detail::parse_rational_at(std::string_view(text).substr(0, comma), 0);
  Rational hi = detail::parse_rational_at(std::string_view(text).substr(comma + 1), comma + 1);
  if (!(lo < hi)) throw PreconditionError("interval requires lo < hi");
  return {std::move(lo), std::move(hi)};
}

inline Rational parse_tolerance(const std::string& text) {
  Rational tol = parse_rational(text);
  if (tol.sign() <= 0) throw PreconditionError("tolerance must be positive");
  return tol;
}

inline void require_degree(const Polynomial& p, int min_degree) {
  if (p.is_zero() || p.degree() < min_degree)
    throw PreconditionError("polynomial must have degree >= " + std::to_string(min_degree));
}

}  // namespace detail

inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
                   std::istream& in = std::cin) {
  CLI::App app{"Exact real-root isolation of rational polynomials by the method of cascades", "cascades"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string("cascades ") + kVersion);

  bool json_out = false;
  int digits = 30;
  app.add_flag("--json", json_out, "Emit a JSON report");
  app.add_option("--digits", digits, "Decimal digits for display")->check(CLI::PositiveNumber);

  std::string poly_text;
  std::string interval_text;
  std::string method = "bisect";
  std::string tol_text = "1e-30";
  std::size_t max_iter = 1000;
  bool positive_only = false;
  bool trace = false;

  auto add_poly = [&](CLI::App* sub) {
    sub->add_option("poly", poly_text, "Polynomial, e.g. \"x^4 - 24x^3 + 198x^2 - 648x + 473\" or \"-\" for stdin")
        ->required();
    sub->fallthrough();
  };

  auto* bounds_cmd = app.add_subcommand("bounds", "Great/small hypotheses and Newton's bound");
  add_poly(bounds_cmd);
  auto* cascades_cmd = app.add_subcommand("cascades", "Cascade chain and positive roots of every level");
  add_poly(cascades_cmd);
  auto* isolate_cmd = app.add_subcommand("isolate", "Isolate the real roots");
  add_poly(isolate_cmd);
  isolate_cmd->add_flag("--positive-only", positive_only, "Only positive roots");
  auto* refine_cmd = app.add_subcommand("refine", "Refine a root inside a sign-change interval");
  add_poly(refine_cmd);
  refine_cmd->add_option("--interval", interval_text, "lo,hi")->required();
  refine_cmd->add_option("--method", method, "bisect|falsepos|newton")
      ->check(CLI::IsMember({"bisect", "falsepos", "newton"}));
  refine_cmd->add_option("--tol", tol_text, "Target enclosure width")->capture_default_str();
  refine_cmd->add_option("--max-iter", max_iter, "Iteration cap for falsepos and newton")->capture_default_str();
  refine_cmd->add_flag("--trace", trace, "Record every step");
  auto* certify_cmd = app.add_subcommand("certify", "Check the interleaving of the roots of p and p'");
  add_poly(certify_cmd);
  auto* replay_cmd = app.add_subcommand("replay", "Replay Rolle's worked quartic");
  replay_cmd->fallthrough();
  auto* compare_cmd = app.add_subcommand("compare", "Bisection vs false position vs safeguarded Newton");
  add_poly(compare_cmd);
  compare_cmd->add_option("--interval", interval_text, "lo,hi")->required();
  compare_cmd->add_option("--tol", tol_text, "Target enclosure width")->capture_default_str();
  compare_cmd->add_option("--max-iter", max_iter, "Iteration cap for falsepos and newton")->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const auto started = std::chrono::steady_clock::now();
  auto elapsed_ms = [&] {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
  };
  auto emit = [&](const std::string& command, const std::optional<Polynomial>& input, report::json results,
                  const std::string& text) {
    if (json_out)
      out << report::envelope(command, input, std::move(results), elapsed_ms()).dump(2) << "\n";
    else
      out << text;
  };

  try {
    if (replay_cmd->parsed()) {
      const auto r = replay_rolle_example();
      emit("replay", r.equation, report::replay(r, digits), report::replay_text(r, digits));
      return r.ok() ? kExitOk : kExitMismatch;
    }

    const Polynomial p = detail::read_polynomial(poly_text, in);

    if (bounds_cmd->parsed()) {
      detail::require_degree(p, 1);
      const auto b = root_bounds(p);
      std::string text = "small = " + b.small.str() + "\ngreat = " + b.great.str() + "\n";
      if (b.has_newton) text += "newton = " + render_rational(b.newton, digits) + "\n";
      for (auto f : b.flags) text += "flag: " + to_string(f) + "\n";
      emit("bounds", p, report::bounds(b, digits), text);
      return kExitOk;
    }

    if (cascades_cmd->parsed()) {
      detail::require_degree(p, 1);
      const auto dec = squarefree_part(p);
      const auto chain = cascade_chain(dec.squarefree);
      const auto levels = cascade_ascent(chain);
      std::string text;
      if (!(dec.squarefree == p)) text += "squarefree part: " + to_text(dec.squarefree) + "\n";
      for (std::size_t i = 0; i < chain.size(); ++i) {
        text += "level " + std::to_string(i + 1) + ": " + to_text(chain.levels[i]) + "  (scaling " +
                chain.scalings[i].str() + ", great hypothesis " + levels[i].great.str() + ")\n";
        for (const auto& r : levels[i].roots)
          text += "    root " + (r.exact ? render_rational(r.lo, digits)
                                         : "in (" + r.lo.str() + ", " + r.hi.str() + ")") + "\n";
      }
      emit("cascades", p, report::chain(p, dec, chain, levels, digits), text);
      return kExitOk;
    }

    if (isolate_cmd->parsed()) {
      detail::require_degree(p, 1);
      const auto roots = positive_only ? isolate_positive_roots(p) : isolate_all_roots(p);
      std::string text;
      for (const auto& r : roots) text += report::root_line(r, digits) + "\n";
      if (roots.empty()) text = "no real roots\n";
      emit("isolate", p, report::roots(roots, digits), text);
      return kExitOk;
    }

    if (certify_cmd->parsed()) {
      detail::require_degree(p, 2);
      const auto r = check_interleaving(p);
      emit("certify", p, report::interleaving(r, digits), report::interleaving_text(r, digits));
      return r.valid() ? kExitOk : kExitMismatch;
    }

    detail::require_degree(p, 1);
    const auto [lo, hi] = detail::parse_interval(interval_text);
    const Rational tol = detail::parse_tolerance(tol_text);
    const auto cert = sign_change(p, lo, hi);
    if (cert.conclusion == Conclusion::NoSignChange)
      throw PreconditionError("no sign change of p on (" + lo.str() + ", " + hi.str() + ")");
    if (cert.conclusion != Conclusion::SignChange) {
      const Rational at = cert.conclusion == Conclusion::ExactRootAtLo ? lo : hi;
      throw PreconditionError("p vanishes at the endpoint " + at.str() + "; nothing to refine");
    }

    if (refine_cmd->parsed()) {
      RootApproximation a;
      if (method == "bisect")
        a = bisect(p, cert, tol, trace);
      else if (method == "falsepos")
        a = false_position(p, cert, tol, max_iter, trace);
      else
        a = newton_refine(p, midpoint(lo, hi), tol, max_iter, cert, trace);
      emit("refine", p, report::approximation(a, digits, trace), report::approximation_text(a, digits, trace));
      return kExitOk;
    }

    // compare
    const std::vector<RootApproximation> runs = {
        bisect(p, cert, tol),
        false_position(p, cert, tol, max_iter),
        newton_refine(p, midpoint(lo, hi), tol, max_iter, cert),
    };
    report::json methods = report::json::array();
    std::string text;
    for (const auto& a : runs) {
      methods.push_back(report::approximation(a, digits, false));
      text += to_string(a.method) + ": " + std::to_string(a.iterations) + " iterations, " + to_string(a.status) +
              ", " + render_enclosure(a.lo, a.hi, digits) + "\n";
    }
    report::json results = {{"certificate", report::certificate(cert, digits)},
                            {"tol", report::rational(tol, digits)},
                            {"methods", methods}};
    emit("compare", p, std::move(results), text);
    return kExitOk;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const PreconditionError& e) {
    err << "precondition violated: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const DerivativeVanished& e) {
    err << e.what() << "\n";
    return kExitPrecondition;
  }
}

}  // namespace cascades
