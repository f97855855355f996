#pragma once

// Integer Laurent polynomials in the symbol `z` and the ring-literal grammar.
//
// A ring literal is parsed before the modulus d is known (words carry their
// scalars symbolically), so parsing yields a LaurentPoly; reduction into
// Z[zeta_d] happens in cyclotomic.hpp.
//
//   expr    := term { ("+" | "-") term }
//   term    := unary { "*" unary }
//   unary   := "-" unary | "+" unary | power
//   power   := primary [ "^" ["-"] digits ]
//   primary := digits | "z" | "(" expr ")"
//
// Negative exponents are accepted only on monomials with coefficient +-1.

#include <cctype>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "prym/error.hpp"

namespace prym {

using Integer = boost::multiprecision::cpp_int;

class LaurentPoly {
 public:
  LaurentPoly() = default;

  static LaurentPoly constant(const Integer& c) { return monomial(c, 0); }

  static LaurentPoly monomial(const Integer& c, long exponent) {
    LaurentPoly p;
    if (c != 0) p.terms_[exponent] = c;
    return p;
  }

  /// Exponent -> nonzero coefficient.
  const std::map<long, Integer>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }

  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0); }

  Integer constant_term() const {
    auto it = terms_.find(0);
    return it == terms_.end() ? Integer(0) : it->second;
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator-(const LaurentPoly& a) { return LaurentPoly{} - a; }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
    return r;
  }

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  /// Non-negative powers always; negative powers only for +-z^m.
  LaurentPoly pow(long n) const {
    if (n < 0) {
      if (terms_.size() != 1 || (terms_.begin()->second != 1 && terms_.begin()->second != -1))
        throw DomainError("negative exponent on a non-monomial ring literal");
      const auto& [e, c] = *terms_.begin();
      return monomial((n % 2 == 0) ? Integer(1) : c, -e * -n);
    }
    LaurentPoly result = constant(1), base = *this;
    while (n > 0) {
      if (n & 1) result = result * base;
      n >>= 1;
      if (n > 0) base = base * base;
    }
    return result;
  }

  /// Canonical text: increasing exponent, e.g. `1+2*z-z^3`, `z^-1`, `0`.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      Integer mag = c < 0 ? Integer(-c) : c;
      if (c < 0)
        out += "-";
      else if (!first)
        out += "+";
      first = false;
      if (e == 0) {
        out += mag.str();
        continue;
      }
      if (mag != 1) out += mag.str() + "*";
      out += "z";
      if (e != 1) out += "^" + std::to_string(e);
    }
    return out;
  }

 private:
  void add_term(long e, const Integer& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  std::map<long, Integer> terms_;
};

namespace detail {

class PolyParser {
 public:
  PolyParser(std::string_view text, std::size_t offset) : text_(text), offset_(offset) {}

  LaurentPoly parse_all() {
    skip_ws();
    if (pos_ >= text_.size()) fail("empty ring literal");
    LaurentPoly p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail(std::string("unexpected character '") + text_[pos_] + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, offset_ + pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char ch) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }

  LaurentPoly expr() {
    LaurentPoly acc = term();
    for (;;) {
      if (accept('+'))
        acc += term();
      else if (accept('-'))
        acc -= term();
      else
        return acc;
    }
  }

  LaurentPoly term() {
    LaurentPoly acc = unary();
    while (accept('*')) acc = acc * unary();
    return acc;
  }

  LaurentPoly unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  LaurentPoly power() {
    std::size_t start = pos_;
    LaurentPoly base = primary();
    if (!accept('^')) return base;
    skip_ws();
    bool negative = accept('-');
    skip_ws();
    Integer e = digits("exponent");
    if (e > 1'000'000) fail("exponent too large");
    long n = e.convert_to<long>();
    try {
      return base.pow(negative ? -n : n);
    } catch (const DomainError& err) {
      throw ParseError(err.what(), offset_ + start);
    }
  }

  LaurentPoly primary() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of ring literal");
    char ch = text_[pos_];
    if (ch == 'z') {
      ++pos_;
      return LaurentPoly::monomial(1, 1);
    }
    if (ch == '(') {
      ++pos_;
      LaurentPoly inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) return LaurentPoly::constant(digits("integer"));
    fail(std::string("unexpected character '") + ch + "' in ring literal");
  }

  Integer digits(const char* what) {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail(std::string("expected ") + what);
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  std::string_view text_;
  std::size_t offset_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses a ring literal such as `1 - z^3 + 2*z`. `offset` shifts reported
/// error positions when the literal is embedded in a larger string.
inline LaurentPoly parse_laurent(std::string_view text, std::size_t offset = 0) {
  return detail::PolyParser(text, offset).parse_all();
}

}  // namespace prym
