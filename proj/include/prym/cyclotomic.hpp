#pragma once

// Exact arithmetic in R = Z[zeta_d].
//
// Elements are stored in the power basis 1, zeta, ..., zeta^(phi(d)-1) modulo
// the d-th cyclotomic polynomial, so equality is coefficient equality.

#include <algorithm>
#include <complex>
#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "prym/error.hpp"
#include "prym/intlinalg.hpp"
#include "prym/poly.hpp"

namespace prym {

using Integer = boost::multiprecision::cpp_int;

namespace detail {

struct CyclotomicData {
  int d = 0;
  int phi = 0;
  std::vector<Integer> phi_poly;             // monic, low to high, size phi+1
  std::vector<std::vector<Integer>> powers;  // x^m mod Phi_d for 0 <= m < max(d, 2*phi-1)
};

// Exact quotient of integer polynomials, `den` monic.
inline std::vector<Integer> poly_divide_exact(std::vector<Integer> num, const std::vector<Integer>& den) {
  const std::size_t dn = den.size() - 1;
  if (num.size() <= dn) return {};
  std::vector<Integer> q(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    Integer c = num[i];
    q[i - dn] = c;
    if (c == 0) continue;
    for (std::size_t t = 0; t <= dn; ++t) num[i - dn + t] -= c * den[t];
  }
  for (const auto& r : num)
    if (r != 0) throw ArithmeticError("cyclotomic polynomial division left a remainder");
  return q;
}

inline std::vector<Integer> build_cyclotomic(int d) {
  // x^d - 1 = prod_{m | d} Phi_m
  std::vector<Integer> p(static_cast<std::size_t>(d) + 1, 0);
  p[0] = -1;
  p[d] = 1;
  for (int m = 1; m < d; ++m)
    if (d % m == 0) p = poly_divide_exact(p, build_cyclotomic(m));
  return p;
}

inline std::unique_ptr<CyclotomicData> make_cyclotomic_data(int d) {
  auto data = std::make_unique<CyclotomicData>();
  data->d = d;
  data->phi_poly = build_cyclotomic(d);
  data->phi = static_cast<int>(data->phi_poly.size()) - 1;
  const std::size_t phi = static_cast<std::size_t>(data->phi);
  const std::size_t table = std::max<std::size_t>(static_cast<std::size_t>(d), 2 * phi - 1);
  std::vector<Integer> cur(phi, 0);
  cur[0] = 1;
  for (std::size_t m = 0; m < table; ++m) {
    data->powers.push_back(cur);
    // multiply by x and reduce with x^phi = -sum_{t<phi} Phi[t] x^t
    Integer top = cur[phi - 1];
    for (std::size_t t = phi - 1; t > 0; --t) cur[t] = cur[t - 1] - top * data->phi_poly[t];
    cur[0] = -top * data->phi_poly[0];
  }
  return data;
}

/// Shared, immutable per-d tables; the returned reference lives for the program.
inline const CyclotomicData& cyclotomic_data(int d) {
  if (d < 2) throw DomainError("modulus d must be >= 2, got " + std::to_string(d));
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<CyclotomicData>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = cache[d];
  if (!slot) slot = make_cyclotomic_data(d);
  return *slot;
}

inline long mod_floor(long a, long m) {
  long r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace detail

/// Euler phi of d, the rank of Z[zeta_d] over Z.
inline int euler_phi(int d) { return detail::cyclotomic_data(d).phi; }

/// Coefficients of the d-th cyclotomic polynomial, low degree first.
inline const std::vector<Integer>& cyclotomic_polynomial(int d) { return detail::cyclotomic_data(d).phi_poly; }

/// sign * zeta^k
struct UnitExponent {
  int sign;
  long k;  // in [0, d)
  friend bool operator==(const UnitExponent&, const UnitExponent&) = default;
};

class CycInt {
 public:
  static CycInt zero(int d) { return CycInt(&detail::cyclotomic_data(d)); }

  static CycInt from_integer(int d, const Integer& n) {
    CycInt r = zero(d);
    r.c_[0] = n;
    return r;
  }

  static CycInt one(int d) { return from_integer(d, 1); }

  /// zeta^k for any integer k.
  static CycInt zeta_pow(int d, long k) {
    CycInt r = zero(d);
    r.c_ = r.ring_->powers[static_cast<std::size_t>(detail::mod_floor(k, d))];
    return r;
  }

  /// Reduces an integer polynomial of any length (coefficient of zeta^m at m).
  static CycInt from_coeffs(int d, const std::vector<Integer>& poly) {
    CycInt r = zero(d);
    for (std::size_t m = 0; m < poly.size(); ++m)
      if (poly[m] != 0) r.add_scaled_power(static_cast<long>(m), poly[m]);
    return r;
  }

  static CycInt from_laurent(int d, const LaurentPoly& p) {
    CycInt r = zero(d);
    for (const auto& [e, c] : p.terms()) r.add_scaled_power(e, c);
    return r;
  }

  int modulus() const { return ring_->d; }
  int degree() const { return ring_->phi; }
  const std::vector<Integer>& coeffs() const { return c_; }

  bool is_zero() const {
    for (const auto& x : c_)
      if (x != 0) return false;
    return true;
  }

  /// The integer value, if this element lies in Z.
  std::optional<Integer> as_integer() const {
    for (std::size_t m = 1; m < c_.size(); ++m)
      if (c_[m] != 0) return std::nullopt;
    return c_[0];
  }

  CycInt& operator+=(const CycInt& o) {
    check_same(o);
    for (std::size_t m = 0; m < c_.size(); ++m) c_[m] += o.c_[m];
    return *this;
  }
  CycInt& operator-=(const CycInt& o) {
    check_same(o);
    for (std::size_t m = 0; m < c_.size(); ++m) c_[m] -= o.c_[m];
    return *this;
  }
  CycInt& operator*=(const CycInt& o) { return *this = *this * o; }

  friend CycInt operator+(CycInt a, const CycInt& b) { return a += b; }
  friend CycInt operator-(CycInt a, const CycInt& b) { return a -= b; }
  friend CycInt operator-(CycInt a) {
    for (auto& x : a.c_) x = -x;
    return a;
  }

  friend CycInt operator*(const CycInt& a, const CycInt& b) {
    a.check_same(b);
    const std::size_t phi = a.c_.size();
    std::vector<Integer> full(2 * phi - 1, 0);
    bool any = false;
    for (std::size_t i = 0; i < phi; ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < phi; ++j)
        if (b.c_[j] != 0) {
          full[i + j] += a.c_[i] * b.c_[j];
          any = true;
        }
    }
    CycInt r(a.ring_);
    if (!any) return r;
    for (std::size_t m = 0; m < phi; ++m) r.c_[m] = std::move(full[m]);
    for (std::size_t m = phi; m < full.size(); ++m)
      if (full[m] != 0) {
        const auto& row = a.ring_->powers[m];
        for (std::size_t t = 0; t < phi; ++t)
          if (row[t] != 0) r.c_[t] += full[m] * row[t];
      }
    return r;
  }

  friend CycInt operator*(const Integer& n, CycInt a) {
    for (auto& x : a.c_) x *= n;
    return a;
  }

  friend bool operator==(const CycInt& a, const CycInt& b) { return a.ring_->d == b.ring_->d && a.c_ == b.c_; }

  /// Complex conjugation: zeta -> zeta^(d-1), re-reduced.
  CycInt conj() const {
    CycInt r(ring_);
    const long d = ring_->d;
    for (std::size_t m = 0; m < c_.size(); ++m)
      if (c_[m] != 0) r.add_scaled_power(d - static_cast<long>(m), c_[m]);
    return r;
  }

  bool is_real() const { return conj() == *this; }

  /// a^n for n >= 0; negative n requires a unit of the form +-zeta^k.
  CycInt pow(long n) const {
    if (n < 0) {
      auto u = unit_exponent();
      if (!u) throw DomainError("negative power of a non-unit " + to_string());
      CycInt r = zeta_pow(ring_->d, -u->k * -n);
      return (u->sign < 0 && (-n) % 2 == 1) ? -r : r;
    }
    CycInt result = one(ring_->d), base = *this;
    while (n > 0) {
      if (n & 1) result *= base;
      n >>= 1;
      if (n > 0) base = base * base;
    }
    return result;
  }

  /// (s, k) with *this == s * zeta^k, by comparison with all 2d candidates.
  std::optional<UnitExponent> unit_exponent() const {
    const int d = ring_->d;
    for (long k = 0; k < d; ++k) {
      const auto& p = ring_->powers[static_cast<std::size_t>(k)];
      if (c_ == p) return UnitExponent{1, k};
      bool neg = true;
      for (std::size_t m = 0; m < c_.size() && neg; ++m) neg = (c_[m] == -p[m]);
      if (neg) return UnitExponent{-1, k};
    }
    return std::nullopt;
  }

  /// Value under zeta -> exp(2 pi i / d). Diagnostics only.
  std::complex<double> embed() const {
    std::complex<double> acc = 0;
    const double step = 2.0 * std::numbers::pi / ring_->d;
    for (std::size_t m = 0; m < c_.size(); ++m)
      acc += c_[m].convert_to<double>() * std::polar(1.0, step * static_cast<double>(m));
    return acc;
  }

  LaurentPoly to_laurent() const {
    LaurentPoly p;
    for (std::size_t m = 0; m < c_.size(); ++m) p += LaurentPoly::monomial(c_[m], static_cast<long>(m));
    return p;
  }

  /// Ring-literal text of the canonical representative.
  std::string to_string() const { return to_laurent().to_string(); }

 private:
  explicit CycInt(const detail::CyclotomicData* ring)
      : ring_(ring), c_(static_cast<std::size_t>(ring->phi), Integer(0)) {}

  void check_same(const CycInt& o) const {
    if (ring_ != o.ring_) throw ModulusMismatch(ring_->d, o.ring_->d);
  }

  void add_scaled_power(long e, const Integer& c) {
    const auto& row = ring_->powers[static_cast<std::size_t>(detail::mod_floor(e, ring_->d))];
    for (std::size_t t = 0; t < c_.size(); ++t)
      if (row[t] != 0) c_[t] += c * row[t];
  }

  const detail::CyclotomicData* ring_;
  std::vector<Integer> c_;
};

inline CycInt zeta_pow(int d, long k) { return CycInt::zeta_pow(d, k); }
inline CycInt conj(const CycInt& a) { return a.conj(); }
inline bool is_real(const CycInt& a) { return a.is_real(); }
inline std::optional<UnitExponent> unit_exponent(const CycInt& a) { return a.unit_exponent(); }

inline CycInt parse_ring_literal(std::string_view text, int d) { return CycInt::from_laurent(d, parse_laurent(text)); }

/// Quotient a / b when it lies in R; nullopt when b does not divide a.
/// Units are handled directly; otherwise the multiplication-by-b matrix is
/// inverted over Q and integrality is checked.
inline std::optional<CycInt> exact_divide(const CycInt& a, const CycInt& b) {
  const int d = a.modulus();
  if (b.modulus() != d) throw ModulusMismatch(d, b.modulus());
  if (b.is_zero()) throw DomainError("division by zero in Z[zeta]");
  if (auto u = b.unit_exponent()) {
    CycInt q = a * zeta_pow(d, -u->k);
    return u->sign < 0 ? -q : q;
  }
  const std::size_t phi = static_cast<std::size_t>(b.degree());
  IntMatrix mult(phi, std::vector<Integer>(phi, 0));
  for (std::size_t m = 0; m < phi; ++m) {
    CycInt col = b * zeta_pow(d, static_cast<long>(m));
    for (std::size_t t = 0; t < phi; ++t) mult[t][m] = col.coeffs()[t];
  }
  auto x = solve_rational_system(mult, a.coeffs());
  if (!x) throw ArithmeticError("multiplication matrix of a nonzero element is singular");
  std::vector<Integer> q(phi);
  for (std::size_t t = 0; t < phi; ++t) {
    if (denominator((*x)[t]) != 1) return std::nullopt;
    q[t] = numerator((*x)[t]);
  }
  return CycInt::from_coeffs(d, q);
}

/// r = constant + sum_{k=1}^{d-1} cosine[k-1] * (zeta^k + zeta^-k)
struct RealBasisSolution {
  Integer constant;
  std::vector<Integer> cosine;

  CycInt evaluate(int d) const {
    CycInt r = CycInt::from_integer(d, constant);
    for (std::size_t k = 1; k <= cosine.size(); ++k)
      if (cosine[k - 1] != 0) {
        long kk = static_cast<long>(k);
        r += cosine[k - 1] * (zeta_pow(d, kk) + zeta_pow(d, -kk));
      }
    return r;
  }
};

namespace detail {

inline std::optional<RealBasisSolution> solve_real_over(const CycInt& r, long kmax) {
  const int d = r.modulus();
  const std::size_t phi = static_cast<std::size_t>(r.degree());
  IntMatrix span(phi, std::vector<Integer>(static_cast<std::size_t>(kmax) + 1, 0));
  span[0][0] = 1;
  for (long k = 1; k <= kmax; ++k) {
    CycInt c = zeta_pow(d, k) + zeta_pow(d, -k);
    for (std::size_t t = 0; t < phi; ++t) span[t][static_cast<std::size_t>(k)] = c.coeffs()[t];
  }
  auto x = solve_integer_system(span, r.coeffs());
  if (!x) return std::nullopt;
  RealBasisSolution sol{(*x)[0], std::vector<Integer>(static_cast<std::size_t>(d - 1), 0)};
  std::copy(x->begin() + 1, x->end(), sol.cosine.begin());
  return sol;
}

}  // namespace detail

/// Writes a real element over {1} u {zeta^k + zeta^-k}. The solution uses only
/// k < phi(d)/2, where these elements form a Z-basis of Z[zeta + zeta^-1], so
/// it is unique; the full spanning set k < d is a fallback.
/// Throws DomainError for non-real input and ArithmeticError if no integer
/// combination exists (which would contradict R' = Z[zeta + zeta^-1]).
inline RealBasisSolution solve_real_basis(const CycInt& r) {
  if (!r.is_real()) throw DomainError("solve_real_basis: " + r.to_string() + " is not real");
  const int d = r.modulus();
  const long phi = r.degree();
  auto sol = detail::solve_real_over(r, phi >= 2 ? phi / 2 - 1 : 0);
  if (!sol) sol = detail::solve_real_over(r, d - 1);
  if (!sol) throw ArithmeticError("solve_real_basis: no integer solution for real element " + r.to_string());
  if (sol->evaluate(d) != r) throw ArithmeticError("solve_real_basis: reconstruction mismatch");
  return *sol;
}

}  // namespace prym
