#include <gtest/gtest.h>

#include <random>

#include "prym/generators.hpp"
#include "prym/predicates.hpp"
#include "prym/selftest.hpp"
#include "prym/wordlang.hpp"

using namespace prym;

namespace {

const GroupTag kAll[] = {GroupTag::U,      GroupTag::USharp, GroupTag::UrU,   GroupTag::UrUSharp,
                         GroupTag::UrSpZ,  GroupTag::Lambda, GroupTag::Delta, GroupTag::Genus2Theta};

}  // namespace

TEST(Predicates, IdentityIsEverywhere) {
  for (int g = 2; g <= 4; ++g)
    for (GroupTag t : kAll) {
      if (t == GroupTag::Genus2Theta && g != 2) {
        continue;
      }
      EXPECT_TRUE(is_member(BlockMat::identity(5, g), t)) << group_name(t);
    }
}

TEST(Predicates, ScalarZeta) {
  const BlockMat m = zeta_pow(5, 1) * BlockMat::identity(5, 3);
  EXPECT_TRUE(is_member(m, GroupTag::Delta));
  EXPECT_TRUE(is_member(m, GroupTag::Lambda));
  EXPECT_FALSE(is_member(m, GroupTag::UrSpZ));
}

TEST(Predicates, UnipotentE11) {
  const BlockMat m = BlockMat::unipotent(parse_matrix("1, 0 ; 0, 0", 5));
  EXPECT_TRUE(is_member(m, GroupTag::Delta));
  EXPECT_TRUE(is_member(m, GroupTag::Lambda));
  EXPECT_TRUE(is_member(m, GroupTag::UrSpZ));
}

TEST(Predicates, ReasonNamesTheFailingClause) {
  const BlockMat lower = parse_block_matrix("1, 0 ; 1, 1", 5, 2);
  auto v = is_member(lower, GroupTag::Lambda);
  EXPECT_FALSE(v);
  EXPECT_EQ(v.reason, "lower-left != 0");
  const BlockMat notsa = BlockMat::unipotent(parse_matrix("z", 5));
  v = is_member(notsa, GroupTag::Delta);
  EXPECT_FALSE(v);
  EXPECT_EQ(v.reason, "B != B*");
  EXPECT_FALSE(is_member(notsa, GroupTag::U));
}

TEST(Predicates, RemarkMatrixInUrUSharpNotLambda) {
  // diag(sqrt5 - 2, sqrt5 + 2) with sqrt5 = 1 + 2 (z + z^4)
  const int d = 5;
  const CycInt s5 = CycInt::one(d) + 2 * (zeta_pow(d, 1) + zeta_pow(d, 4));
  EXPECT_EQ(s5 * s5, CycInt::from_integer(d, 5));
  RingMatrix m = RingMatrix::identity(d, 2);
  m(0, 0) = s5 - 2 * CycInt::one(d);
  m(1, 1) = s5 + 2 * CycInt::one(d);
  const BlockMat bm(2, m);
  EXPECT_TRUE(is_member(bm, GroupTag::UrUSharp));
  auto v = is_member(bm, GroupTag::Lambda);
  EXPECT_FALSE(v);
  EXPECT_EQ(v.reason, "det(D) is not +-zeta^k");
}

TEST(Predicates, USharpEvenPowers) {
  // d = 4: det zeta is odd, det zeta^2 = -1 is even
  RingMatrix m = RingMatrix::identity(4, 2);
  m(0, 0) = zeta_pow(4, 1);
  m(1, 1) = zeta_pow(4, 1);  // zeta Id: det zeta^2
  EXPECT_TRUE(is_member(BlockMat(2, m), GroupTag::USharp));
  const BlockMat t = elem_Tij(3, 4, 1, -2, CycInt::one(4)) * big_T(3, 4);
  EXPECT_TRUE(is_member(t, GroupTag::U));
  EXPECT_EQ(det(t.matrix()), zeta_pow(4, 2));
  EXPECT_TRUE(is_member(t, GroupTag::USharp));
  // odd d: every power of zeta is even
  EXPECT_TRUE(is_member(big_T(3, 5), GroupTag::USharp));
}

TEST(Predicates, ChainOfInclusionsOnRandomWords) {
  sample::Rng rng(21);
  for (int t = 0; t < 150; ++t) {
    const int d = 2 + static_cast<int>(rng() % 9), g = 2 + static_cast<int>(rng() % 3);
    const BlockMat m = evaluate(sample::lambda_word(rng, d, g, 5), d, g);
    const bool delta = is_member(m, GroupTag::Delta).member, lambda = is_member(m, GroupTag::Lambda).member,
               urus = is_member(m, GroupTag::UrUSharp).member, uru = is_member(m, GroupTag::UrU).member,
               u = is_member(m, GroupTag::U).member;
    EXPECT_TRUE(lambda);
    EXPECT_TRUE(!delta || lambda);
    EXPECT_TRUE(!lambda || urus);
    EXPECT_TRUE(!urus || uru);
    EXPECT_TRUE(!uru || u);
    EXPECT_TRUE(is_member(inverse(m), GroupTag::Lambda));
  }
}

TEST(Predicates, DeltaClosedUnderProductAndInverse) {
  sample::Rng rng(22);
  for (int t = 0; t < 60; ++t) {
    const int d = 2 + static_cast<int>(rng() % 9), g = 2 + static_cast<int>(rng() % 3);
    const std::size_t n = static_cast<std::size_t>(g - 1);
    const BlockMat a = zeta_pow(d, static_cast<long>(rng() % 7)) *
                       BlockMat::unipotent(sample::self_adjoint(rng, d, n, -3, 3));
    const BlockMat b = BlockMat::unipotent(sample::self_adjoint(rng, d, n, -3, 3));
    EXPECT_TRUE(is_member(a * b, GroupTag::Delta));
    EXPECT_TRUE(is_member(inverse(a), GroupTag::Delta));
  }
}

TEST(Genus2, ThetaExamples) {
  const int d = 5;
  auto id = genus2_theta_project(BlockMat::identity(d, 2));
  EXPECT_EQ(id.sign, 1);
  EXPECT_TRUE(id.r.is_zero());

  const CycInt r = CycInt::one(d) + zeta_pow(d, 1) + zeta_pow(d, -1);
  RingMatrix m = RingMatrix::identity(d, 2);
  m(0, 1) = r;
  auto img = genus2_theta_project(zeta_pow(d, 1) * BlockMat(2, m));
  EXPECT_EQ(img.sign, 1);
  EXPECT_EQ(img.r, parse_ring_literal("1+z+z^4", d));

  RingMatrix neg = -CycInt::one(d) * RingMatrix::identity(d, 2);
  neg(0, 1) = r;
  img = genus2_theta_project(BlockMat(2, neg));
  EXPECT_EQ(img.sign, -1);
  EXPECT_EQ(img.r, -r);

  EXPECT_THROW(genus2_theta_project(BlockMat::identity(6, 2)), DomainError);
  EXPECT_THROW(genus2_theta_project(BlockMat::identity(5, 3)), DomainError);
  EXPECT_THROW(genus2_theta_project(parse_block_matrix("1,0;1,1", 5, 2)), DomainError);
}

TEST(Genus2, RealPartForEvenD) {
  const int d = 6;
  RingMatrix m = RingMatrix::identity(d, 2);
  m(0, 1) = CycInt::from_integer(d, 3);
  EXPECT_EQ(genus2_real_part(zeta_pow(d, 2) * BlockMat(2, m)), CycInt::from_integer(d, 3));
  EXPECT_EQ(genus2_real_part(zeta_pow(d, 3) * BlockMat(2, m)), CycInt::from_integer(d, 3));
}

TEST(Genus2, ShapeOfCatalogueWords) {
  sample::Rng rng(23);
  for (int t = 0; t < 120; ++t) {
    const int d = 2 + static_cast<int>(rng() % 11);
    const BlockMat m = evaluate(sample::lambda_word(rng, d, 2, 6), d, 2);
    EXPECT_TRUE(genus2_shape(m)) << m.to_string();
    EXPECT_TRUE(is_member(m, GroupTag::Genus2Theta));
    const auto& a = m.matrix();
    auto u = unit_exponent(a(1, 1));
    ASSERT_TRUE(u);
    EXPECT_EQ(a(0, 0) * a(1, 1).conj(), CycInt::one(d));
  }
}

TEST(Genus2, ThetaIsHomomorphismAndKillsScalars) {
  sample::Rng rng(24);
  for (int t = 0; t < 80; ++t) {
    const int d = 3 + 2 * static_cast<int>(rng() % 4);
    const BlockMat a = evaluate(sample::lambda_word(rng, d, 2, 5), d, 2);
    const BlockMat b = evaluate(sample::lambda_word(rng, d, 2, 5), d, 2);
    const ThetaImage x = genus2_theta_project(a), y = genus2_theta_project(b), xy = genus2_theta_project(a * b);
    EXPECT_EQ(xy.sign, x.sign * y.sign);
    EXPECT_EQ(xy.r, x.r + y.r);
    EXPECT_EQ(genus2_theta_project(zeta_pow(d, 2) * a), x);
  }
}

TEST(Predicates, TagNames) {
  for (GroupTag t : kAll) EXPECT_EQ(parse_group_tag(group_name(t)), t);
  EXPECT_FALSE(parse_group_tag("Sp"));
}
