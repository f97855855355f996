#pragma once

// Command-line front end. Exit codes: 0 success or member, 1 clean negative
// (non-member, failed self-test), 2 usage, parse or domain error.

#include <algorithm>
#include <cstdint>
#include <iostream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "prym/decompose.hpp"
#include "prym/error.hpp"
#include "prym/foxcover.hpp"
#include "prym/predicates.hpp"
#include "prym/ringlinalg.hpp"
#include "prym/selftest.hpp"
#include "prym/wordlang.hpp"

namespace prym {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitError = 2;

struct RunConfig {
  int d = 0;
  std::optional<int> g;
  std::string word, matrix, b, group, map, inverse_map, inject;
  std::uint64_t seed = SuiteConfig{}.seed;
  int max_d = SuiteConfig{}.max_d;
  int max_g = SuiteConfig{}.max_g;
};

namespace detail {

inline void require_d(const RunConfig& c) {
  if (c.d < 2) throw DomainError("--d must be >= 2");
}

inline int require_g(const RunConfig& c) {
  if (!c.g) throw DomainError("--g is required");
  if (*c.g < 2) throw DomainError("--g must be >= 2");
  return *c.g;
}

// g from the flag if given, else from a (2g-2)-square matrix.
inline int genus_for(const RunConfig& c, std::size_t size) {
  if (c.g) return require_g(c);
  if (size == 0 || size % 2 != 0) throw DomainError("matrix size must be 2g-2 for some g >= 2");
  return static_cast<int>(size / 2) + 1;
}

}  // namespace detail

inline int cmd_eval(const RunConfig& c, std::ostream& out) {
  detail::require_d(c);
  out << evaluate(parse_word(c.word), c.d, detail::require_g(c)).to_string() << "\n";
  return kExitOk;
}

inline int cmd_check(const RunConfig& c, std::ostream& out) {
  detail::require_d(c);
  auto tag = parse_group_tag(c.group);
  if (!tag) throw DomainError("unknown group '" + c.group + "'");
  RingMatrix m = parse_matrix(c.matrix, c.d);
  const BlockMat bm(detail::genus_for(c, m.rows()), std::move(m));
  const Membership v = is_member(bm, *tag);
  if (v) {
    out << "member " << group_name(*tag) << "\n";
    return kExitOk;
  }
  out << "non-member " << group_name(*tag) << ": " << v.reason << "\n";
  return kExitNegative;
}

inline int cmd_decompose_delta(const RunConfig& c, std::ostream& out) {
  detail::require_d(c);
  const RingMatrix b = parse_matrix(c.b, c.d);
  const int g = c.g ? detail::require_g(c) : static_cast<int>(b.rows()) + 1;
  out << render(decompose_delta(b, c.d, g)) << "\n";
  return kExitOk;
}

inline int cmd_reduce_lambda(const RunConfig& c, std::ostream& out) {
  detail::require_d(c);
  RingMatrix m = parse_matrix(c.matrix, c.d);
  const BlockMat bm(detail::genus_for(c, m.rows()), std::move(m));
  out << render(reduce_lambda(bm, parse_word(c.word))) << "\n";
  return kExitOk;
}

inline int cmd_fox(const RunConfig& c, std::ostream& out) {
  detail::require_d(c);
  const int g = detail::require_g(c);
  const Endo phi = parse_endo(c.map, c.inverse_map, g);
  if (auto ok = check_member(phi, c.d); !ok) {
    out << "not in Gamma_{X,C}: " << ok.reason << "\n";
    return kExitNegative;
  }
  out << eta_chain(phi, c.d, g).to_string() << "\n";
  return kExitOk;
}

inline int cmd_selftest(const RunConfig& c, std::ostream& out) {
  if (c.max_d < 2 || c.max_g < 2) throw DomainError("--max-d and --max-g must be >= 2");
  SuiteConfig cfg{c.max_d, c.max_g, c.seed, c.inject};
  if (!cfg.inject.empty()) {
    auto suites = all_suites();
    if (std::none_of(suites.begin(), suites.end(), [&](const auto& s) { return s.first == cfg.inject; }))
      throw DomainError("unknown suite '" + cfg.inject + "'");
  }
  bool all = true;
  for (const SuiteResult& r : run_all_suites(cfg)) {
    all = all && r.passed;
    out << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << r.cases << " cases)";
    if (!r.message.empty()) out << ": " << r.message;
    out << "\n";
  }
  out << (all ? "all suites passed" : "some suites failed") << "\n";
  return all ? kExitOk : kExitNegative;
}

/// args excludes the program name.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Prym representations of handlebody and twist groups over Z[zeta_d]", "prym"};
  app.require_subcommand(1);
  RunConfig c;

  auto add_dg = [&](CLI::App* sub) {
    sub->add_option("--d", c.d, "modulus d >= 2")->required();
    sub->add_option("--g", c.g, "genus g >= 2");
  };
  auto* eval = app.add_subcommand("eval", "evaluate a generator word");
  add_dg(eval);
  eval->add_option("--word", c.word, "word, e.g. \"TH(2)^-1 * G1(1)\"")->required();

  auto* check = app.add_subcommand("check", "membership test");
  add_dg(check);
  check->add_option("--matrix", c.matrix, "rows separated by ';', entries by ','")->required();
  check->add_option("--group", c.group, "U, USharp, UrU, UrUSharp, UrSpZ, Lambda, Delta, Genus2Theta")->required();

  auto* dd = app.add_subcommand("decompose-delta", "word in G1, G2, G3 for [[Id, B], [0, Id]]");
  add_dg(dd);
  dd->add_option("--B", c.b, "self-adjoint (g-1)-square matrix")->required();

  auto* rl = app.add_subcommand("reduce-lambda", "word for M in Lambda given a witness for its D block");
  add_dg(rl);
  rl->add_option("--matrix", c.matrix, "M")->required();
  rl->add_option("--word", c.word, "witness word wD with the same lower-right block")->required();

  auto* fox = app.add_subcommand("fox", "eta of a free-group automorphism");
  add_dg(fox);
  fox->add_option("--map", c.map, "e.g. \"x1 -> x2 x1 x2^-1 ; x2 -> x2\"")->required();
  fox->add_option("--inverse", c.inverse_map, "inverse automorphism, same format")->required();

  auto* st = app.add_subcommand("selftest", "run the sweep suites");
  st->add_option("--max-d", c.max_d, "largest modulus swept")->capture_default_str();
  st->add_option("--max-g", c.max_g, "largest genus swept")->capture_default_str();
  st->add_option("--seed", c.seed, "seed for randomised suites")->capture_default_str();
  st->add_option("--inject-failure", c.inject, "corrupt the first comparison of the named suite");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }

  try {
    if (eval->parsed()) return cmd_eval(c, out);
    if (check->parsed()) return cmd_check(c, out);
    if (dd->parsed()) return cmd_decompose_delta(c, out);
    if (rl->parsed()) return cmd_reduce_lambda(c, out);
    if (fox->parsed()) return cmd_fox(c, out);
    if (st->parsed()) return cmd_selftest(c, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}

}  // namespace prym
