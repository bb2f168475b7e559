#pragma once

#include "grassmann/calculus.hpp"
#include "grassmann/element.hpp"
#include "grassmann/expression.hpp"
#include "grassmann/grading.hpp"
#include "grassmann/identity.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace grassmann::cli {

enum class Format { text, json };

/// Exit codes of the command-line front end.
enum ExitCode : int { ok = 0, invalid = 1, counterexample = 2 };

/// Monomial key for json output: dot-joined indices, "" for the unit.
inline std::string json_key(const Monomial& m) {
  std::string key;
  for (Index i : m.indices()) {
    if (!key.empty()) key += '.';
    key += std::to_string(i);
  }
  return key;
}

inline nlohmann::ordered_json to_json(const Element& p) {
  nlohmann::ordered_json obj = nlohmann::ordered_json::object();
  for (const auto& [m, c] : p.terms()) obj[json_key(m)] = to_string(c);
  return obj;
}

namespace detail {

struct Settings {
  Index generators = 4;
  std::string format = "text";
  std::string expression;
  Index variable = 0;
  unsigned cap = 0;
  std::string domain = "all";
  unsigned trials = 100;
  std::uint64_t seed = 0;
};

inline Element read_element(const Settings& s) {
  return evaluate_element(parse(s.expression, Namespace::generators).root, s.generators);
}

inline void check_variable(const Settings& s) {
  if (s.variable < 1 || s.variable > s.generators)
    throw std::invalid_argument("-i must name a generator between 1 and " + std::to_string(s.generators));
}

inline void print_substitution(std::ostream& out, const Substitution& sub) {
  for (const auto& [slot, value] : sub) out << "  y" << slot << " -> " << to_string(value) << '\n';
}

}  // namespace detail

/// Runs one command. `args` excludes the program name. Returns the exit code.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  detail::Settings s;
  CLI::App app{"Exact arithmetic in the Grassmann algebra over the rationals", "grassmann"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("-n,--generators", s.generators, "Number of generators x1..xn")
      ->check(CLI::Range(Index{1}, Index{999999999}))
      ->capture_default_str();
  app.add_option("--format", s.format, "Output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();

  auto with_expr = [&](const std::string& name, const std::string& help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("EXPR", s.expression, "Expression, e.g. \"1 + 2*x1*x2\"")->required();
    return sub;
  };

  CLI::App* normalize = with_expr("normalize", "Print the canonical form");
  CLI::App* grade = with_expr("grade", "Print the even and odd parts");
  CLI::App* center = with_expr("center", "Report whether the element is central");
  CLI::App* body_cmd = with_expr("body", "Print the scalar (unit) coefficient");
  CLI::App* soul_cmd = with_expr("soul", "Print the element minus its body");
  CLI::App* derive = with_expr("derive", "Left derivative with respect to x_K");
  derive->add_option("-i", s.variable, "Generator index K")->required();
  CLI::App* integrate = with_expr("integrate", "Berezin integral over x_K");
  integrate->add_option("-i", s.variable, "Generator index K")->required();
  CLI::App* nilindex = with_expr("nilindex", "Smallest k with p^k = 0");
  nilindex->add_option("--cap", s.cap, "Largest power tried (default n+1)")->check(CLI::PositiveNumber);
  CLI::App* check = with_expr("check-identity", "Test whether a polynomial in y1, y2, ... is an identity");
  check->add_option("--domain", s.domain, "Substitution domain")
      ->check(CLI::IsMember({"all", "even", "odd"}))
      ->capture_default_str();
  check->add_option("--trials", s.trials, "Random trials for non-multilinear input")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  check->add_option("--seed", s.seed, "Seed for random trials")->capture_default_str();
  CLI::App* ideal = with_expr("in-ideal", "Test membership of a free polynomial in the anticommutator ideal");

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ExitCode::ok : ExitCode::invalid;
  }

  const bool json = s.format == "json";
  try {
    if (normalize->parsed() || soul_cmd->parsed() || derive->parsed() || integrate->parsed()) {
      Element p = detail::read_element(s);
      if (soul_cmd->parsed()) {
        p = soul(p);
      } else if (derive->parsed()) {
        detail::check_variable(s);
        p = left_derivative(p, s.variable);
      } else if (integrate->parsed()) {
        detail::check_variable(s);
        p = berezin_integral(p, s.variable);
      }
      if (json) {
        out << to_json(p).dump() << '\n';
      } else {
        out << to_string(p) << '\n';
      }
    } else if (grade->parsed()) {
      const Element p = detail::read_element(s);
      const Element even = even_part(p), odd = odd_part(p);
      if (json) {
        out << nlohmann::ordered_json{{"even", to_json(even)}, {"odd", to_json(odd)}}.dump() << '\n';
      } else {
        out << "even: " << to_string(even) << '\n' << "odd: " << to_string(odd) << '\n';
      }
    } else if (center->parsed()) {
      const bool central = is_central(detail::read_element(s), s.generators);
      if (json) {
        out << nlohmann::ordered_json{{"central", central}}.dump() << '\n';
      } else {
        out << (central ? "true" : "false") << '\n';
      }
    } else if (body_cmd->parsed()) {
      const Scalar a = body(detail::read_element(s));
      if (json) {
        out << nlohmann::ordered_json{{"body", to_string(a)}}.dump() << '\n';
      } else {
        out << to_string(a) << '\n';
      }
    } else if (nilindex->parsed()) {
      const unsigned cap = s.cap == 0 ? s.generators + 1 : s.cap;
      const NilReport report = nil_index(detail::read_element(s), cap);
      if (json) {
        nlohmann::ordered_json obj;
        obj["index"] = report.index ? nlohmann::ordered_json(*report.index) : nlohmann::ordered_json(nullptr);
        obj["cap"] = report.cap;
        out << obj.dump() << '\n';
      } else if (report.index) {
        out << *report.index << '\n';
      } else {
        out << "exceeds cap " << report.cap << '\n';
      }
    } else if (check->parsed()) {
      const FreePolynomial f = evaluate_free(parse(s.expression, Namespace::indeterminates).root);
      IdentityOptions options;
      options.generators = s.generators;
      options.domain = s.domain == "even" ? Domain::even : s.domain == "odd" ? Domain::odd : Domain::all;
      options.trials = s.trials;
      options.seed = s.seed;
      const IdentityVerdict verdict = is_identity(f, options);
      if (json) {
        nlohmann::ordered_json obj;
        obj["holds"] = verdict.holds;
        obj["mode"] = std::string(to_string(verdict.mode));
        obj["substitutions"] = verdict.checked;
        if (verdict.witness) {
          nlohmann::ordered_json w = nlohmann::ordered_json::object();
          for (const auto& [slot, value] : *verdict.witness) w["y" + std::to_string(slot)] = to_json(value);
          obj["witness"] = w;
          obj["value"] = to_json(evaluate(f, *verdict.witness));
        }
        out << obj.dump() << '\n';
      } else {
        out << "holds: " << (verdict.holds ? "true" : "false") << '\n'
            << "mode: " << to_string(verdict.mode) << '\n'
            << "substitutions: " << verdict.checked << '\n';
        if (verdict.witness) {
          out << "witness:\n";
          detail::print_substitution(out, *verdict.witness);
          out << "value: " << to_string(evaluate(f, *verdict.witness)) << '\n';
        }
      }
      return verdict.holds ? ExitCode::ok : ExitCode::counterexample;
    } else if (ideal->parsed()) {
      const FreePolynomial f = evaluate_free(parse(s.expression, Namespace::generators).root);
      const bool member = in_ideal(f, s.generators);
      if (json) {
        out << nlohmann::ordered_json{{"in_ideal", member}}.dump() << '\n';
      } else {
        out << (member ? "true" : "false") << '\n';
      }
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return ExitCode::invalid;
  }
  return ExitCode::ok;
}

}  // namespace grassmann::cli
