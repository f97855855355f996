#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "prym/cyclotomic.hpp"
#include "prym/intlinalg.hpp"
#include "prym/poly.hpp"

using namespace prym;

namespace {

CycInt lit(const char* s, int d) { return parse_ring_literal(s, d); }

std::vector<Integer> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

}  // namespace

TEST(Cyclotomic, PolynomialMatchesMobiusProduct) {
  for (int d = 2; d <= 40; ++d) {
    EXPECT_EQ(cyclotomic_polynomial(d), oracle::as_integers(oracle::cyclotomic(d))) << "d=" << d;
    EXPECT_EQ(euler_phi(d), oracle::totient(d)) << "d=" << d;
  }
}

TEST(Cyclotomic, RejectsSmallModulus) {
  EXPECT_THROW(zeta_pow(1, 0), DomainError);
  EXPECT_THROW(CycInt::zero(0), DomainError);
}

TEST(Cyclotomic, ZetaPowExamples) {
  EXPECT_EQ(zeta_pow(5, 0).coeffs(), ints({1, 0, 0, 0}));
  EXPECT_EQ(zeta_pow(5, 4).coeffs(), ints({-1, -1, -1, -1}));
  EXPECT_EQ(zeta_pow(4, 2).coeffs(), ints({-1, 0}));
}

TEST(Cyclotomic, ZetaPowMatchesLongDivision) {
  for (int d = 2; d <= 30; ++d)
    for (long k = -2 * d; k <= 2 * d; ++k) {
      EXPECT_EQ(zeta_pow(d, k).coeffs(), oracle::as_integers(oracle::zeta_power(d, k))) << d << " " << k;
      EXPECT_EQ(zeta_pow(d, k), zeta_pow(d, ((k % d) + d) % d));
    }
}

TEST(Cyclotomic, MultiplicationExamples) {
  EXPECT_EQ(lit("1+z", 4) * lit("1-z", 4), CycInt::from_integer(4, 2));
  EXPECT_EQ(zeta_pow(3, 1) * zeta_pow(3, 1), lit("-1-z", 3));
  EXPECT_THROW(zeta_pow(3, 1) + zeta_pow(5, 1), ModulusMismatch);
}

TEST(Cyclotomic, RingOperationsAgreeWithComplexEmbedding) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> coef(-9, 9);
  for (int d = 2; d <= 16; ++d)
    for (int t = 0; t < 30; ++t) {
      std::vector<Integer> a(static_cast<std::size_t>(d + 3)), b(static_cast<std::size_t>(d + 2));
      for (auto& x : a) x = coef(rng);
      for (auto& x : b) x = coef(rng);
      const CycInt x = CycInt::from_coeffs(d, a), y = CycInt::from_coeffs(d, b);
      EXPECT_LT(std::abs(oracle::embed(x * y) - oracle::embed(x) * oracle::embed(y)), 1e-6);
      EXPECT_LT(std::abs(oracle::embed(x + y) - oracle::embed(x) - oracle::embed(y)), 1e-6);
      EXPECT_LT(std::abs(oracle::embed(x.conj()) - std::conj(oracle::embed(x))), 1e-6);
      EXPECT_EQ(x * CycInt::one(d), x);
      EXPECT_EQ(x - x, CycInt::zero(d));
    }
}

TEST(Cyclotomic, ConjugationExamplesAndLaws) {
  EXPECT_EQ(conj(zeta_pow(5, 1)).coeffs(), ints({-1, -1, -1, -1}));
  EXPECT_EQ(conj(CycInt::from_integer(7, 12)), CycInt::from_integer(7, 12));
  EXPECT_EQ(conj(lit("1+z", 4)), lit("1-z", 4));
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> coef(-5, 5);
  for (int d = 2; d <= 20; ++d)
    for (int t = 0; t < 20; ++t) {
      std::vector<Integer> a(static_cast<std::size_t>(euler_phi(d))), b(a.size());
      for (auto& x : a) x = coef(rng);
      for (auto& x : b) x = coef(rng);
      const CycInt x = CycInt::from_coeffs(d, a), y = CycInt::from_coeffs(d, b);
      EXPECT_EQ(conj(conj(x)), x);
      EXPECT_EQ(conj(x * y), conj(x) * conj(y));
      EXPECT_TRUE(is_real(x + conj(x)));
    }
}

TEST(Cyclotomic, IsReal) {
  for (int d = 2; d <= 12; ++d) EXPECT_TRUE(is_real(zeta_pow(d, 1) + zeta_pow(d, d - 1)));
  for (int d = 3; d <= 12; ++d) EXPECT_FALSE(is_real(zeta_pow(d, 1)));
  EXPECT_TRUE(is_real(CycInt::from_integer(9, 5)));
}

TEST(Cyclotomic, UnitExponentExamples) {
  auto u = unit_exponent(zeta_pow(7, 3));
  ASSERT_TRUE(u);
  EXPECT_EQ(u->sign, 1);
  EXPECT_EQ(u->k, 3);
  u = unit_exponent(-zeta_pow(5, 2));
  ASSERT_TRUE(u);
  EXPECT_EQ(u->sign, -1);
  EXPECT_EQ(u->k, 2);
  EXPECT_FALSE(unit_exponent(lit("1+z", 5)));
}

TEST(Cyclotomic, UnitExponentAgreesWithBruteForce) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> coef(-1, 1);
  for (int d = 2; d <= 14; ++d)
    for (int t = 0; t < 60; ++t) {
      std::vector<Integer> a(static_cast<std::size_t>(euler_phi(d)));
      for (auto& x : a) x = coef(rng);
      const CycInt x = CycInt::from_coeffs(d, a);
      bool found = false;
      for (long k = 0; k < d && !found; ++k) {
        const auto p = oracle::as_integers(oracle::zeta_power(d, k));
        std::vector<Integer> n(p.size());
        for (std::size_t m = 0; m < p.size(); ++m) n[m] = -p[m];
        found = x.coeffs() == p || x.coeffs() == n;
      }
      EXPECT_EQ(unit_exponent(x).has_value(), found) << x.to_string() << " d=" << d;
      for (long j = 0; j < 3; ++j)
        EXPECT_EQ(unit_exponent(zeta_pow(d, j) * x).has_value(), unit_exponent(x).has_value());
      if (auto v = unit_exponent(x)) {
        EXPECT_EQ(Integer(v->sign) * zeta_pow(d, v->k), x);
      }
    }
}

TEST(Cyclotomic, Powers) {
  EXPECT_EQ(zeta_pow(6, 1).pow(6), CycInt::one(6));
  EXPECT_EQ((-zeta_pow(5, 2)).pow(-3), (-zeta_pow(5, 2)).pow(3).pow(-1));
  EXPECT_EQ((-zeta_pow(5, 2)).pow(-1) * (-zeta_pow(5, 2)), CycInt::one(5));
  EXPECT_EQ(lit("1+z", 5).pow(2), lit("1+2*z+z^2", 5));
  EXPECT_THROW(lit("2", 5).pow(-1), DomainError);
}

TEST(Cyclotomic, ExactDivide) {
  const CycInt a = lit("1+z", 7), b = lit("2-z^3", 7);
  auto q = exact_divide(a * b, b);
  ASSERT_TRUE(q);
  EXPECT_EQ(*q, a);
  EXPECT_FALSE(exact_divide(CycInt::one(7), CycInt::from_integer(7, 2)));
  // 1 - zeta is invertible in Z[zeta_6]
  EXPECT_TRUE(exact_divide(CycInt::one(6), lit("1-z", 6)));
}

TEST(Cyclotomic, SolveRealBasisExamples) {
  auto s = solve_real_basis(CycInt::one(5));
  EXPECT_EQ(s.constant, 1);
  for (const auto& c : s.cosine) EXPECT_EQ(c, 0);

  const CycInt r = zeta_pow(5, 1) + zeta_pow(5, 4);
  s = solve_real_basis(r);
  EXPECT_EQ(s.constant, 0);
  EXPECT_EQ(s.cosine[0], 1);
  for (std::size_t k = 1; k < s.cosine.size(); ++k) EXPECT_EQ(s.cosine[k], 0);

  // Any valid solution is acceptable; (2, n_2 = 1) is one of them.
  const CycInt sq = r * r;
  EXPECT_EQ(solve_real_basis(sq).evaluate(5), sq);
  RealBasisSolution alt{2, {0, 1, 0, 0}};
  EXPECT_EQ(alt.evaluate(5), sq);

  EXPECT_THROW(solve_real_basis(zeta_pow(5, 1)), DomainError);
}

TEST(Cyclotomic, SolveRealBasisReconstructs) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> coef(-7, 7);
  for (int d = 2; d <= 24; ++d)
    for (int t = 0; t < 25; ++t) {
      std::vector<Integer> a(static_cast<std::size_t>(euler_phi(d)));
      for (auto& x : a) x = coef(rng);
      const CycInt x = CycInt::from_coeffs(d, a);
      const CycInt r = x + conj(x) + CycInt::from_integer(d, coef(rng));
      const auto sol = solve_real_basis(r);
      EXPECT_EQ(sol.evaluate(d), r);
      EXPECT_EQ(sol.cosine.size(), static_cast<std::size_t>(d - 1));
    }
}

TEST(Cyclotomic, RingLiteralParsing) {
  EXPECT_EQ(lit("1 - z^3 + 2*z", 5), lit("1+2*z-z^3", 5));
  EXPECT_EQ(lit("z^-1", 5), zeta_pow(5, 4));
  EXPECT_EQ(lit("(1+z)^2", 7), lit("1+2*z+z^2", 7));
  EXPECT_EQ(lit("z^5", 5), CycInt::one(5));
  EXPECT_EQ(lit("2 * (z - 1) * (z + 1)", 4), CycInt::from_integer(4, -4));
  EXPECT_EQ(zeta_pow(5, 4).to_string(), "-1-z-z^2-z^3");
  EXPECT_EQ(CycInt::zero(5).to_string(), "0");
}

TEST(Poly, ParseErrorsCarryPositions) {
  try {
    parse_laurent("1 + * z");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 4u);
  }
  try {
    parse_laurent("1 + y", 10);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 14u);
  }
  EXPECT_THROW(parse_laurent("(1+z"), ParseError);
  EXPECT_THROW(parse_laurent(""), ParseError);
  EXPECT_THROW(parse_laurent("(1+z)^-1"), ParseError);
}

TEST(Poly, RenderRoundTrip) {
  for (const char* s : {"0", "1", "-1", "z", "-z", "z^-1", "1+2*z-z^3", "-3*z^-2+z^7", "12"}) {
    const LaurentPoly p = parse_laurent(s);
    EXPECT_EQ(p.to_string(), s);
    EXPECT_EQ(parse_laurent(p.to_string()), p);
  }
}

TEST(IntLinalg, HermiteCertificate) {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<long> coef(-6, 6);
  for (int t = 0; t < 60; ++t) {
    const std::size_t rows = 1 + rng() % 5, cols = 1 + rng() % 6;
    IntMatrix a(rows, std::vector<Integer>(cols));
    for (auto& r : a)
      for (auto& x : r) x = coef(rng);
    const HermiteForm hf = hermite_column_form(a);
    // A U = H
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) {
        Integer acc = 0;
        for (std::size_t k = 0; k < cols; ++k) acc += a[r][k] * hf.u[k][c];
        EXPECT_EQ(acc, hf.h[r][c]);
      }
    // pivots positive, strictly descending staircase, zeros above each pivot
    for (std::size_t c = 0; c < hf.pivot_rows.size(); ++c) {
      const std::size_t pr = hf.pivot_rows[c];
      EXPECT_GT(hf.h[pr][c], 0);
      for (std::size_t r = 0; r < pr; ++r) EXPECT_EQ(hf.h[r][c], 0);
      if (c > 0) {
        EXPECT_GT(pr, hf.pivot_rows[c - 1]);
      }
    }
    for (std::size_t c = hf.pivot_rows.size(); c < cols; ++c)
      for (std::size_t r = 0; r < rows; ++r) EXPECT_EQ(hf.h[r][c], 0);
  }
}

TEST(IntLinalg, IntegerSolveAgreesWithBruteForce) {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<long> coef(-3, 3);
  for (int t = 0; t < 200; ++t) {
    IntMatrix a(2, std::vector<Integer>(2));
    for (auto& r : a)
      for (auto& x : r) x = coef(rng);
    std::vector<Integer> b{coef(rng) * 2, coef(rng)};
    bool brute = false;
    for (long x = -30; x <= 30 && !brute; ++x)
      for (long y = -30; y <= 30 && !brute; ++y)
        brute = a[0][0] * x + a[0][1] * y == b[0] && a[1][0] * x + a[1][1] * y == b[1];
    auto sol = solve_integer_system(a, b);
    if (sol) {
      EXPECT_EQ(a[0][0] * (*sol)[0] + a[0][1] * (*sol)[1], b[0]);
      EXPECT_EQ(a[1][0] * (*sol)[0] + a[1][1] * (*sol)[1], b[1]);
    }
    // brute force only searches a box, so it can miss large solutions
    if (brute) {
      EXPECT_TRUE(sol.has_value());
    }
    // nonsingular systems only
    const Integer det = a[0][0] * a[1][1] - a[0][1] * a[1][0];
    auto q = solve_rational_system(a, b);
    EXPECT_EQ(q.has_value(), det != 0);
    if (q) {
      EXPECT_EQ(Rational(a[0][0]) * (*q)[0] + Rational(a[0][1]) * (*q)[1], Rational(b[0]));
      EXPECT_EQ(Rational(a[1][0]) * (*q)[0] + Rational(a[1][1]) * (*q)[1], Rational(b[1]));
    }
  }
  EXPECT_FALSE(solve_integer_system({{2}}, {Integer(1)}));
  auto q = solve_rational_system({{2}}, {Integer(1)});
  ASSERT_TRUE(q);
  EXPECT_EQ((*q)[0], Rational(1, 2));
}
