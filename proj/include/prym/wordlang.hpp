#pragma once

// Words in named generators: parsing, rendering and evaluation.
//
//   word   := [ factor { "*" factor } ]
//   factor := gen [ "^" ["-"] digits ]
//   gen    := NAME "(" args ")" | "T"
//   args   := indices [ ";" ring-literal ]
//
// UrSp takes an inline matrix literal, Transvection a comma-separated list of
// ring literals (one per basis vector).

#include <cctype>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "prym/error.hpp"
#include "prym/generators.hpp"
#include "prym/poly.hpp"
#include "prym/ringlinalg.hpp"

namespace prym {

struct Factor {
  GenSpec gen;
  long exponent = 1;
  friend bool operator==(const Factor&, const Factor&) = default;
};

/// A product of generator powers; empty means the identity.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Factor> factors) : factors_(std::move(factors)) {
    for (const auto& f : factors_)
      if (f.exponent == 0) throw DomainError("word factors must have nonzero exponents");
  }

  static Word single(GenSpec g, long exponent = 1) {
    if (exponent == 0) return Word{};
    return Word({Factor{std::move(g), exponent}});
  }

  const std::vector<Factor>& factors() const { return factors_; }
  bool empty() const { return factors_.empty(); }
  std::size_t size() const { return factors_.size(); }

  Word& operator*=(const Word& o) {
    factors_.insert(factors_.end(), o.factors_.begin(), o.factors_.end());
    return *this;
  }
  friend Word operator*(Word a, const Word& b) { return a *= b; }

  Word inverse() const {
    std::vector<Factor> out(factors_.rbegin(), factors_.rend());
    for (auto& f : out) f.exponent = -f.exponent;
    return Word(std::move(out));
  }

  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Factor> factors_;
};

namespace detail {

inline std::string render_int_matrix(const IntMatrix& m) {
  std::string out;
  for (std::size_t r = 0; r < m.size(); ++r) {
    if (r > 0) out += " ; ";
    for (std::size_t c = 0; c < m[r].size(); ++c) {
      if (c > 0) out += ", ";
      out += m[r][c].str();
    }
  }
  return out;
}

inline std::string render_gen(const GenSpec& spec) {
  auto ij = [](int i, int j) { return std::to_string(i) + "," + std::to_string(j); };
  return std::visit(
      overloaded{
          [](const gen::Ti& s) { return "Ti(" + std::to_string(s.i) + "; " + s.r.to_string() + ")"; },
          [&](const gen::Tij& s) { return "Tij(" + ij(s.i, s.j) + "; " + s.r.to_string() + ")"; },
          [](const gen::BigT&) { return std::string("T"); },
          [](const gen::AH& s) { return "AH(" + std::to_string(s.i) + ")"; },
          [&](const gen::AHPrime& s) { return "AHPrime(" + ij(s.i, s.j) + ")"; },
          [](const gen::TH& s) { return "TH(" + std::to_string(s.i) + ")"; },
          [&](const gen::THPrime& s) { return "THPrime(" + ij(s.i, s.j) + ")"; },
          [](const gen::TwistE& s) { return "TwistE(" + std::to_string(s.i) + ")"; },
          [](const gen::GammaIK& s) { return "GammaIK(" + std::to_string(s.i) + "," + std::to_string(s.k) + ")"; },
          [&](const gen::GammaIJK& s) { return "GammaIJK(" + ij(s.i, s.j) + "," + std::to_string(s.k) + ")"; },
          [](const gen::G1& s) { return "G1(" + std::to_string(s.i) + ")"; },
          [](const gen::G2& s) { return "G2(" + std::to_string(s.i) + "," + std::to_string(s.k) + ")"; },
          [&](const gen::G3& s) { return "G3(" + ij(s.i, s.j) + "," + std::to_string(s.k) + ")"; },
          [](const gen::Zeta& s) { return "Zeta(" + std::to_string(s.k) + ")"; },
          [](const gen::UrSp& s) { return "UrSp(" + render_int_matrix(s.m) + ")"; },
          [](const gen::Transvection& s) {
            std::string out = "Transvection(";
            for (std::size_t t = 0; t < s.v.size(); ++t) out += (t ? ", " : "") + s.v[t].to_string();
            return out + ")";
          },
      },
      spec);
}

class WordParser {
 public:
  explicit WordParser(std::string_view text) : text_(text) {}

  Word parse() {
    std::vector<Factor> factors;
    skip_ws();
    if (pos_ == text_.size()) return Word{};
    factors.push_back(factor());
    for (;;) {
      skip_ws();
      if (pos_ == text_.size()) break;
      expect('*');
      factors.push_back(factor());
    }
    return Word(std::move(factors));
  }

 private:
  [[noreturn]] void fail(const std::string& what, std::size_t at) const { throw ParseError(what, at); }
  [[noreturn]] void fail(const std::string& what) const { fail(what, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char ch) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == ch;
  }

  void expect(char ch) {
    if (!peek(ch)) {
      if (pos_ >= text_.size()) fail(std::string("expected '") + ch + "' but reached end of input");
      fail(std::string("expected '") + ch + "', found '" + text_[pos_] + "'");
    }
    ++pos_;
  }

  long signed_int() {
    skip_ws();
    bool neg = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      neg = text_[pos_] == '-';
      ++pos_;
      skip_ws();
    }
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    if (pos_ - start > 15) fail("integer too large", start);
    long v = std::stol(std::string(text_.substr(start, pos_ - start)));
    return neg ? -v : v;
  }

  Factor factor() {
    skip_ws();
    GenSpec g = generator();
    long e = 1;
    if (peek('^')) {
      ++pos_;
      const std::size_t exp_at = pos_;
      e = signed_int();
      if (e == 0) fail("exponent must be nonzero", exp_at);
    }
    return Factor{std::move(g), e};
  }

  // Raw text up to the matching ')' (the '(' is already consumed).
  std::pair<std::string_view, std::size_t> raw_args() {
    const std::size_t start = pos_;
    int depth = 0;
    for (; pos_ < text_.size(); ++pos_) {
      if (text_[pos_] == '(') {
        ++depth;
      } else if (text_[pos_] == ')') {
        if (depth == 0) {
          auto out = std::pair{text_.substr(start, pos_ - start), start};
          ++pos_;
          return out;
        }
        --depth;
      }
    }
    fail("unbalanced parentheses", start);
  }

  GenSpec generator() {
    const std::size_t at = pos_;
    std::size_t end = pos_;
    while (end < text_.size() && std::isalnum(static_cast<unsigned char>(text_[end]))) ++end;
    if (end == pos_) {
      if (pos_ >= text_.size()) fail("expected a generator name but reached end of input");
      fail(std::string("expected a generator name, found '") + text_[pos_] + "'");
    }
    const std::string name(text_.substr(pos_, end - pos_));
    pos_ = end;
    if (name == "T" && !peek('(')) return gen::BigT{};
    if (!peek('(')) fail("expected '(' after " + name);
    ++pos_;

    if (name == "UrSp") {
      auto [raw, off] = raw_args();
      IntMatrix m;
      for (auto& row : parse_matrix_entries(raw, off)) {
        std::vector<Integer> ints;
        for (auto& p : row) {
          if (!p.is_constant()) fail("UrSp entries must be integers", off);
          ints.push_back(p.constant_term());
        }
        m.push_back(std::move(ints));
      }
      return gen::UrSp{std::move(m)};
    }
    if (name == "Transvection") {
      auto [raw, off] = raw_args();
      std::vector<LaurentPoly> v;
      for (auto [cell, cell_off] : split_top_level(raw, ',', off)) v.push_back(parse_laurent(cell, cell_off));
      return gen::Transvection{std::move(v)};
    }

    // indices [ ";" ring-literal ]
    auto [raw, off] = raw_args();
    std::string_view idx_text = raw;
    std::optional<std::pair<std::string_view, std::size_t>> scalar;
    if (auto semi = raw.find(';'); semi != std::string_view::npos) {
      idx_text = raw.substr(0, semi);
      scalar = std::pair{raw.substr(semi + 1), off + semi + 1};
    }
    std::vector<long> idx;
    {
      std::string_view trimmed = idx_text;
      bool blank = trimmed.find_first_not_of(" \t\r\n") == std::string_view::npos;
      if (!blank) {
        for (auto [cell, cell_off] : split_top_level(idx_text, ',', off)) {
          WordParser sub(cell);
          long v = sub.signed_int();
          sub.skip_ws();
          if (sub.pos_ != cell.size()) fail("malformed index", cell_off + sub.pos_);
          idx.push_back(v);
        }
      }
    }
    auto arity = [&](std::size_t n, bool wants_scalar) {
      if (idx.size() != n || scalar.has_value() != wants_scalar)
        fail(name + " expects " + std::to_string(n) + " index argument(s)" + (wants_scalar ? " and a scalar" : ""),
             at);
    };
    auto ring = [&] { return parse_laurent(scalar->first, scalar->second); };
    auto as_int = [](long v) { return static_cast<int>(v); };

    if (name == "Ti") {
      arity(1, true);
      return gen::Ti{as_int(idx[0]), ring()};
    }
    if (name == "Tij") {
      arity(2, true);
      return gen::Tij{as_int(idx[0]), as_int(idx[1]), ring()};
    }
    if (name == "AH") {
      arity(1, false);
      return gen::AH{as_int(idx[0])};
    }
    if (name == "AHPrime") {
      arity(2, false);
      return gen::AHPrime{as_int(idx[0]), as_int(idx[1])};
    }
    if (name == "TH") {
      arity(1, false);
      return gen::TH{as_int(idx[0])};
    }
    if (name == "THPrime") {
      arity(2, false);
      return gen::THPrime{as_int(idx[0]), as_int(idx[1])};
    }
    if (name == "TwistE") {
      arity(1, false);
      return gen::TwistE{as_int(idx[0])};
    }
    if (name == "GammaIK") {
      arity(2, false);
      return gen::GammaIK{as_int(idx[0]), idx[1]};
    }
    if (name == "GammaIJK") {
      arity(3, false);
      return gen::GammaIJK{as_int(idx[0]), as_int(idx[1]), idx[2]};
    }
    if (name == "G1") {
      arity(1, false);
      return gen::G1{as_int(idx[0])};
    }
    if (name == "G2") {
      arity(2, false);
      return gen::G2{as_int(idx[0]), idx[1]};
    }
    if (name == "G3") {
      arity(3, false);
      return gen::G3{as_int(idx[0]), as_int(idx[1]), idx[2]};
    }
    if (name == "Zeta") {
      arity(1, false);
      return gen::Zeta{idx[0]};
    }
    fail("unknown generator '" + name + "'", at);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Word parse_word(std::string_view text) { return detail::WordParser(text).parse(); }

/// Canonical text; parse_word(render(w)) == w.
inline std::string render(const Word& w) {
  std::string out;
  for (std::size_t t = 0; t < w.factors().size(); ++t) {
    const auto& f = w.factors()[t];
    if (t > 0) out += " * ";
    out += detail::render_gen(f.gen);
    if (f.exponent != 1) out += "^" + std::to_string(f.exponent);
  }
  return out;
}

/// Left-to-right product of the factor matrices; the empty word is Id.
inline BlockMat evaluate(const Word& w, int d, int g) {
  BlockMat acc = BlockMat::identity(d, g);
  for (const auto& f : w.factors()) acc = acc * power(build_generator(f.gen, d, g), f.exponent);
  return acc;
}

}  // namespace prym
