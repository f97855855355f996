#pragma once

// Dense matrices over Z[zeta_d], the intersection form and its unitary group.
//
// Vectors are columns and matrices act on the left, so a composition f o g
// is the product M_f * M_g. Block matrices of genus g use the ordered basis
//   e_1, ..., e_{g-1}, e_{-1}, ..., e_{-(g-1)}.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "prym/cyclotomic.hpp"
#include "prym/error.hpp"
#include "prym/poly.hpp"

namespace prym {

using RingVector = std::vector<CycInt>;

class RingMatrix {
 public:
  RingMatrix(int d, std::size_t rows, std::size_t cols) : d_(d), rows_(rows), cols_(cols) {
    if (rows == 0 || cols == 0) throw DomainError("matrix dimensions must be positive");
    a_.assign(rows * cols, CycInt::zero(d));
  }

  static RingMatrix identity(int d, std::size_t n) {
    RingMatrix m(d, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = CycInt::one(d);
    return m;
  }

  static RingMatrix scalar(const CycInt& s, std::size_t n) {
    RingMatrix m(s.modulus(), n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = s;
    return m;
  }

  int modulus() const { return d_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  CycInt& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const CycInt& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  RingMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    RingMatrix b(d_, nr, nc);
    for (std::size_t r = 0; r < nr; ++r)
      for (std::size_t c = 0; c < nc; ++c) b(r, c) = (*this)(r0 + r, c0 + c);
    return b;
  }

  void set_block(std::size_t r0, std::size_t c0, const RingMatrix& b) {
    for (std::size_t r = 0; r < b.rows(); ++r)
      for (std::size_t c = 0; c < b.cols(); ++c) (*this)(r0 + r, c0 + c) = b(r, c);
  }

  bool is_zero() const {
    for (const auto& x : a_)
      if (!x.is_zero()) return false;
    return true;
  }

  RingMatrix transpose() const {
    RingMatrix t(d_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  /// Conjugate transpose M*.
  RingMatrix adjoint() const {
    RingMatrix t(d_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c).conj();
    return t;
  }

  RingMatrix& operator+=(const RingMatrix& o) {
    check_shape(o);
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
    return *this;
  }
  RingMatrix& operator-=(const RingMatrix& o) {
    check_shape(o);
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
    return *this;
  }
  friend RingMatrix operator+(RingMatrix a, const RingMatrix& b) { return a += b; }
  friend RingMatrix operator-(RingMatrix a, const RingMatrix& b) { return a -= b; }
  friend RingMatrix operator-(RingMatrix a) {
    for (auto& x : a.a_) x = -x;
    return a;
  }

  friend RingMatrix operator*(const RingMatrix& a, const RingMatrix& b) {
    if (a.d_ != b.d_) throw ModulusMismatch(a.d_, b.d_);
    if (a.cols_ != b.rows_) throw DomainError("matrix product: inner dimensions differ");
    RingMatrix p(a.d_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const CycInt& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const CycInt& bkj = b(k, j);
          if (!bkj.is_zero()) p(i, j) += aik * bkj;
        }
      }
    return p;
  }

  friend RingMatrix operator*(const CycInt& s, RingMatrix m) {
    for (auto& x : m.a_) x = s * x;
    return m;
  }

  friend RingVector operator*(const RingMatrix& m, const RingVector& v) {
    if (v.size() != m.cols_) throw DomainError("matrix-vector product: dimension mismatch");
    RingVector out(m.rows_, CycInt::zero(m.d_));
    for (std::size_t i = 0; i < m.rows_; ++i)
      for (std::size_t k = 0; k < m.cols_; ++k)
        if (!m(i, k).is_zero() && !v[k].is_zero()) out[i] += m(i, k) * v[k];
    return out;
  }

  friend bool operator==(const RingMatrix& a, const RingMatrix& b) {
    return a.d_ == b.d_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

  /// Matrix text format: `1, 1-z ; 0, 1`.
  std::string to_string() const {
    std::string out;
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r > 0) out += " ; ";
      for (std::size_t c = 0; c < cols_; ++c) {
        if (c > 0) out += ", ";
        out += (*this)(r, c).to_string();
      }
    }
    return out;
  }

 private:
  void check_shape(const RingMatrix& o) const {
    if (d_ != o.d_) throw ModulusMismatch(d_, o.d_);
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DomainError("matrix shapes differ");
  }

  int d_;
  std::size_t rows_, cols_;
  std::vector<CycInt> a_;
};

inline RingMatrix adjoint(const RingMatrix& m) { return m.adjoint(); }

/// E_{ij} of size n (0-based indices).
inline RingMatrix unit_matrix(int d, std::size_t n, std::size_t i, std::size_t j) {
  RingMatrix m(d, n, n);
  m(i, j) = CycInt::one(d);
  return m;
}

inline bool is_self_adjoint(const RingMatrix& m) { return m.is_square() && m.adjoint() == m; }

namespace detail {

inline CycInt divide_or_throw(const CycInt& a, const CycInt& b) {
  auto q = exact_divide(a, b);
  if (!q) throw ArithmeticError("fraction-free elimination: inexact division by " + b.to_string());
  return *q;
}

}  // namespace detail

/// Determinant by fraction-free (Bareiss) elimination. Every division is
/// exact because the intermediate entries are minors of the input.
inline CycInt det(const RingMatrix& input) {
  if (!input.is_square()) throw DomainError("determinant of a non-square matrix");
  const int d = input.modulus();
  const std::size_t n = input.rows();
  RingMatrix m = input;
  bool negate = false;
  CycInt prev = CycInt::one(d);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k).is_zero()) {
      std::size_t p = k + 1;
      while (p < n && m(p, k).is_zero()) ++p;
      if (p == n) return CycInt::zero(d);
      for (std::size_t c = 0; c < n; ++c) std::swap(m(k, c), m(p, c));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        CycInt num = m(k, k) * m(i, j) - m(i, k) * m(k, j);
        m(i, j) = detail::divide_or_throw(num, prev);
      }
      m(i, k) = CycInt::zero(d);
    }
    prev = m(k, k);
  }
  return negate ? -m(n - 1, n - 1) : m(n - 1, n - 1);
}

/// Inverse over R via the adjugate; nullopt when det is not a unit of R.
inline std::optional<RingMatrix> inverse_general(const RingMatrix& m) {
  if (!m.is_square()) throw DomainError("inverse of a non-square matrix");
  const int d = m.modulus();
  const std::size_t n = m.rows();
  CycInt dm = det(m);
  if (dm.is_zero()) return std::nullopt;
  if (n == 1) {
    auto q = exact_divide(CycInt::one(d), dm);
    if (!q) return std::nullopt;
    RingMatrix r(d, 1, 1);
    r(0, 0) = *q;
    return r;
  }
  RingMatrix inv(d, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      // cofactor C_{ji} goes to inv(i, j)
      RingMatrix minor(d, n - 1, n - 1);
      for (std::size_t r = 0, rr = 0; r < n; ++r) {
        if (r == j) continue;
        for (std::size_t c = 0, cc = 0; c < n; ++c) {
          if (c == i) continue;
          minor(rr, cc++) = m(r, c);
        }
        ++rr;
      }
      CycInt cof = det(minor);
      if ((i + j) % 2 == 1) cof = -cof;
      auto q = exact_divide(cof, dm);
      if (!q) return std::nullopt;
      inv(i, j) = *q;
    }
  return inv;
}

/// Omega = [[0, Id], [-Id, 0]] with (g-1)-square blocks.
inline RingMatrix omega_matrix(int d, int g) {
  if (g < 2) throw DomainError("genus must be >= 2");
  const std::size_t n = static_cast<std::size_t>(g - 1);
  RingMatrix om(d, 2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    om(i, n + i) = CycInt::one(d);
    om(n + i, i) = -CycInt::one(d);
  }
  return om;
}

/// A 2(g-1)-square matrix tagged with its genus.
class BlockMat {
 public:
  BlockMat(int g, RingMatrix m) : g_(g), m_(std::move(m)) {
    if (g < 2) throw DomainError("genus must be >= 2, got " + std::to_string(g));
    const std::size_t size = 2 * static_cast<std::size_t>(g - 1);
    if (m_.rows() != size || m_.cols() != size)
      throw DomainError("block matrix for genus " + std::to_string(g) + " must be " + std::to_string(size) +
                        "-square");
  }

  static BlockMat identity(int d, int g) {
    return BlockMat(g, RingMatrix::identity(d, 2 * static_cast<std::size_t>(g - 1)));
  }

  static BlockMat from_blocks(const RingMatrix& a, const RingMatrix& b, const RingMatrix& c, const RingMatrix& dd) {
    const std::size_t n = a.rows();
    RingMatrix m(a.modulus(), 2 * n, 2 * n);
    m.set_block(0, 0, a);
    m.set_block(0, n, b);
    m.set_block(n, 0, c);
    m.set_block(n, n, dd);
    return BlockMat(static_cast<int>(n) + 1, std::move(m));
  }

  /// [[Id, B], [0, Id]]
  static BlockMat unipotent(const RingMatrix& b) {
    const int d = b.modulus();
    const std::size_t n = b.rows();
    return from_blocks(RingMatrix::identity(d, n), b, RingMatrix(d, n, n), RingMatrix::identity(d, n));
  }

  int genus() const { return g_; }
  int modulus() const { return m_.modulus(); }
  std::size_t half() const { return static_cast<std::size_t>(g_ - 1); }
  const RingMatrix& matrix() const { return m_; }

  RingMatrix upper_left() const { return m_.block(0, 0, half(), half()); }
  RingMatrix upper_right() const { return m_.block(0, half(), half(), half()); }
  RingMatrix lower_left() const { return m_.block(half(), 0, half(), half()); }
  RingMatrix lower_right() const { return m_.block(half(), half(), half(), half()); }

  friend BlockMat operator*(const BlockMat& a, const BlockMat& b) {
    if (a.g_ != b.g_) throw DomainError("block matrices of different genus");
    return BlockMat(a.g_, a.m_ * b.m_);
  }
  friend BlockMat operator*(const CycInt& s, const BlockMat& m) { return BlockMat(m.g_, s * m.m_); }
  friend bool operator==(const BlockMat& a, const BlockMat& b) { return a.g_ == b.g_ && a.m_ == b.m_; }

  std::string to_string() const { return m_.to_string(); }

 private:
  int g_;
  RingMatrix m_;
};

inline BlockMat omega(int d, int g) { return BlockMat(g, omega_matrix(d, g)); }

/// Position of the basis vector e_i (i = +-1..+-(g-1)) in the block ordering.
inline std::size_t basis_position(int g, int i) {
  const int n = g - 1;
  if (i == 0 || i > n || i < -n)
    throw DomainError("basis index " + std::to_string(i) + " out of range for genus " + std::to_string(g));
  return i > 0 ? static_cast<std::size_t>(i - 1) : static_cast<std::size_t>(n - i - 1);
}

inline RingVector basis_vector(int d, int g, int i) {
  RingVector v(2 * static_cast<std::size_t>(g - 1), CycInt::zero(d));
  v[basis_position(g, i)] = CycInt::one(d);
  return v;
}

/// <u, v> = u^T Omega conj(v): linear in u, conjugate-linear in v, <e_i, e_-i> = 1.
inline CycInt form_eval(const RingVector& u, const RingVector& v, int g) {
  const std::size_t n = static_cast<std::size_t>(g - 1);
  if (u.size() != 2 * n || v.size() != 2 * n) throw DomainError("form_eval: vectors must have length 2(g-1)");
  CycInt acc = CycInt::zero(u[0].modulus());
  for (std::size_t i = 0; i < n; ++i) {
    acc += u[i] * v[n + i].conj();
    acc -= u[n + i] * v[i].conj();
  }
  return acc;
}

/// M* Omega M == Omega, exactly.
inline bool preserves_form(const BlockMat& m) {
  const RingMatrix om = omega_matrix(m.modulus(), m.genus());
  return m.matrix().adjoint() * om * m.matrix() == om;
}

/// Exact inverse. Form-preserving matrices use M^-1 = -Omega M* Omega;
/// everything else goes through the adjugate.
inline BlockMat inverse(const BlockMat& m) {
  const RingMatrix om = omega_matrix(m.modulus(), m.genus());
  if (m.matrix().adjoint() * om * m.matrix() == om) return BlockMat(m.genus(), -(om * m.matrix().adjoint() * om));
  auto inv = inverse_general(m.matrix());
  if (!inv) throw DomainError("matrix is not invertible over Z[zeta_" + std::to_string(m.modulus()) + "]");
  return BlockMat(m.genus(), std::move(*inv));
}

/// m^e for any integer e (negative powers via the exact inverse).
inline BlockMat power(const BlockMat& m, long e) {
  BlockMat base = e < 0 ? inverse(m) : m;
  unsigned long n = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  BlockMat result = BlockMat::identity(m.modulus(), m.genus());
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

namespace detail {

// Splits on `sep` at parenthesis depth 0, keeping the offset of each piece.
inline std::vector<std::pair<std::string_view, std::size_t>> split_top_level(std::string_view text, char sep,
                                                                             std::size_t offset) {
  std::vector<std::pair<std::string_view, std::size_t>> parts;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || (text[i] == sep && depth == 0)) {
      parts.emplace_back(text.substr(start, i - start), offset + start);
      start = i + 1;
    } else if (text[i] == '(') {
      ++depth;
    } else if (text[i] == ')') {
      --depth;
    }
  }
  return parts;
}

}  // namespace detail

/// Parses the matrix text format into rows of symbolic entries.
inline std::vector<std::vector<LaurentPoly>> parse_matrix_entries(std::string_view text, std::size_t offset = 0) {
  std::vector<std::vector<LaurentPoly>> rows;
  for (auto [row_text, row_off] : detail::split_top_level(text, ';', offset)) {
    std::vector<LaurentPoly> row;
    for (auto [cell, cell_off] : detail::split_top_level(row_text, ',', row_off)) row.push_back(parse_laurent(cell, cell_off));
    if (!rows.empty() && row.size() != rows.front().size())
      throw ParseError("matrix rows have different lengths", row_off);
    rows.push_back(std::move(row));
  }
  return rows;
}

inline RingMatrix parse_matrix(std::string_view text, int d) {
  auto rows = parse_matrix_entries(text);
  RingMatrix m(d, rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c) m(r, c) = CycInt::from_laurent(d, rows[r][c]);
  return m;
}

inline BlockMat parse_block_matrix(std::string_view text, int d, int g) { return BlockMat(g, parse_matrix(text, d)); }

}  // namespace prym
