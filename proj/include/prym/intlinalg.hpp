#pragma once

// Exact linear algebra over Z and Q on small dense matrices.

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "prym/error.hpp"

namespace prym {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using IntMatrix = std::vector<std::vector<Integer>>;  // row-major, rows of equal length

/// Column Hermite normal form A * U = H with U unimodular.
///
/// H is lower echelon: pivot columns are 0..rank-1, pivot entries positive,
/// and entries left of a pivot are reduced into [0, pivot).
struct HermiteForm {
  IntMatrix h;
  IntMatrix u;
  std::vector<std::size_t> pivot_rows;  // pivot_rows[c] = row of the pivot in column c
};

namespace detail {

// Extended gcd with g >= 0 and s*a + t*b = g.
inline void xgcd(const Integer& a, const Integer& b, Integer& g, Integer& s, Integer& t) {
  Integer old_r = a, r = b, old_s = 1, cs = 0, old_t = 0, ct = 1;
  while (r != 0) {
    Integer q = old_r / r;
    Integer tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * cs;
    old_s = cs;
    cs = tmp;
    tmp = old_t - q * ct;
    old_t = ct;
    ct = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  g = old_r;
  s = old_s;
  t = old_t;
}

// Floor division for the off-pivot reduction.
inline Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace detail

inline HermiteForm hermite_column_form(const IntMatrix& a) {
  const std::size_t m = a.size();
  const std::size_t n = m == 0 ? 0 : a[0].size();
  HermiteForm f{a, IntMatrix(n, std::vector<Integer>(n, 0)), {}};
  for (std::size_t i = 0; i < n; ++i) f.u[i][i] = 1;

  auto col_combine = [&](std::size_t p, std::size_t q, const Integer& s, const Integer& t, const Integer& x,
                         const Integer& y) {
    // [col_p, col_q] <- [s*col_p + t*col_q, x*col_p + y*col_q]
    auto apply = [&](IntMatrix& mat) {
      for (auto& row : mat) {
        Integer cp = row[p], cq = row[q];
        row[p] = s * cp + t * cq;
        row[q] = x * cp + y * cq;
      }
    };
    apply(f.h);
    apply(f.u);
  };

  std::size_t col = 0;
  for (std::size_t row = 0; row < m && col < n; ++row) {
    for (std::size_t c = col + 1; c < n; ++c) {
      if (f.h[row][c] == 0) continue;
      Integer g, s, t;
      detail::xgcd(f.h[row][col], f.h[row][c], g, s, t);
      Integer x = -f.h[row][c] / g, y = f.h[row][col] / g;
      col_combine(col, c, s, t, x, y);
    }
    if (f.h[row][col] == 0) continue;
    if (f.h[row][col] < 0) {
      for (auto& r : f.h) r[col] = -r[col];
      for (auto& r : f.u) r[col] = -r[col];
    }
    const Integer pivot = f.h[row][col];
    for (std::size_t c = 0; c < col; ++c) {
      Integer q = detail::floor_div(f.h[row][c], pivot);
      if (q == 0) continue;
      for (auto& r : f.h) r[c] -= q * r[col];
      for (auto& r : f.u) r[c] -= q * r[col];
    }
    f.pivot_rows.push_back(row);
    ++col;
  }
  return f;
}

/// Some integer solution x of A x = b, or nullopt when none exists.
inline std::optional<std::vector<Integer>> solve_integer_system(const IntMatrix& a, const std::vector<Integer>& b) {
  const std::size_t m = a.size();
  const std::size_t n = m == 0 ? 0 : a[0].size();
  if (b.size() != m) throw DomainError("solve_integer_system: dimension mismatch");
  HermiteForm f = hermite_column_form(a);
  const std::size_t rank = f.pivot_rows.size();

  std::vector<Integer> y(n, 0);
  std::size_t next = 0;
  for (std::size_t row = 0; row < m; ++row) {
    Integer rest = b[row];
    for (std::size_t c = 0; c < next; ++c) rest -= f.h[row][c] * y[c];
    if (next < rank && f.pivot_rows[next] == row) {
      if (rest % f.h[row][next] != 0) return std::nullopt;
      y[next] = rest / f.h[row][next];
      ++next;
    } else if (rest != 0) {
      return std::nullopt;
    }
  }

  std::vector<Integer> x(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t c = 0; c < rank; ++c) x[i] += f.u[i][c] * y[c];
  for (std::size_t row = 0; row < m; ++row) {
    Integer acc = 0;
    for (std::size_t c = 0; c < n; ++c) acc += a[row][c] * x[c];
    if (acc != b[row]) throw ArithmeticError("solve_integer_system: certificate check failed");
  }
  return x;
}

/// Unique rational solution of a square nonsingular system, or nullopt if singular.
inline std::optional<std::vector<Rational>> solve_rational_system(const IntMatrix& a, const std::vector<Integer>& b) {
  const std::size_t n = a.size();
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != n) throw DomainError("solve_rational_system: matrix not square");
    for (std::size_t j = 0; j < n; ++j) m[i][j] = Rational(a[i][j]);
    m[i][n] = Rational(b[i]);
  }
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && m[p][k] == 0) ++p;
    if (p == n) return std::nullopt;
    std::swap(m[p], m[k]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || m[i][k] == 0) continue;
      Rational factor = m[i][k] / m[k][k];
      for (std::size_t j = k; j <= n; ++j) m[i][j] -= factor * m[k][j];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = m[i][n] / m[i][i];
  return x;
}

}  // namespace prym
