#include "hfo/algebra.hpp"

#include <gtest/gtest.h>

using namespace hfo;

namespace {

AlgebraElement B(int i) { return AlgebraElement::basis(i); }

TEST(Algebra, MultiplicationTableMatchesQuiverRelations) {
  EXPECT_EQ(B(basis::r1) * B(basis::r2), B(basis::r12));
  EXPECT_EQ(B(basis::r2) * B(basis::r3), B(basis::r23));
  EXPECT_EQ(B(basis::r1) * B(basis::r23), B(basis::r123));
  EXPECT_EQ(B(basis::r12) * B(basis::r3), B(basis::r123));
  // the two defining relations
  EXPECT_TRUE((B(basis::r2) * B(basis::r1)).is_zero());
  EXPECT_TRUE((B(basis::r3) * B(basis::r2)).is_zero());
  // non-composable products vanish
  EXPECT_TRUE((B(basis::r1) * B(basis::r3)).is_zero());
  EXPECT_TRUE((B(basis::r23) * B(basis::r23)).is_zero());
  EXPECT_TRUE((B(basis::r123) * B(basis::r123)).is_zero());
  EXPECT_TRUE((B(basis::i1) * B(basis::i2)).is_zero());
  EXPECT_EQ(B(basis::i1) * B(basis::i1), B(basis::i1));
  EXPECT_EQ(B(basis::i2) * B(basis::i2), B(basis::i2));
}

TEST(Algebra, AssociativityExhaustive) {
  for (int a = 0; a < basis::count; ++a)
    for (int b = 0; b < basis::count; ++b)
      for (int c = 0; c < basis::count; ++c)
        EXPECT_EQ((B(a) * B(b)) * B(c), B(a) * (B(b) * B(c)))
            << kBasisNames[a] << " " << kBasisNames[b] << " " << kBasisNames[c];
}

TEST(Algebra, UnitLawsExhaustive) {
  const AlgebraElement one = AlgebraElement::unit();
  for (int a = 0; a < basis::count; ++a) {
    EXPECT_EQ(one * B(a), B(a)) << kBasisNames[a];
    EXPECT_EQ(B(a) * one, B(a)) << kBasisNames[a];
  }
}

TEST(Algebra, AdditionIsInvolutive) {
  for (int a = 0; a < basis::count; ++a) EXPECT_TRUE((B(a) + B(a)).is_zero());
  const AlgebraElement x = B(basis::r1) + B(basis::r23);
  EXPECT_TRUE((x + x).is_zero());
  EXPECT_EQ(x + AlgebraElement::zero(), x);
}

TEST(Algebra, IdempotentLookups) {
  EXPECT_EQ(left_idempotent(B(basis::r2)), Idem::I2);
  EXPECT_EQ(right_idempotent(B(basis::r2)), Idem::I1);
  EXPECT_EQ(left_idempotent(B(basis::r123)), Idem::I1);
  EXPECT_EQ(right_idempotent(B(basis::r123)), Idem::I2);
  EXPECT_EQ(left_idempotent(B(basis::r12)), Idem::I1);
  EXPECT_EQ(right_idempotent(B(basis::r12)), Idem::I1);
  EXPECT_THROW(left_idempotent(B(basis::i1)), InvariantError);
  EXPECT_THROW(right_idempotent(B(basis::i2)), InvariantError);
  EXPECT_THROW(left_idempotent(B(basis::r1) + B(basis::r2)), InvariantError);
}

TEST(Algebra, ProductIdempotentsMatchFactors) {
  for (int a = basis::r1; a < basis::count; ++a)
    for (int b = basis::r1; b < basis::count; ++b) {
      const AlgebraElement p = B(a) * B(b);
      if (p.is_zero()) continue;
      EXPECT_EQ(left_idempotent(p), left_idempotent(B(a)));
      EXPECT_EQ(right_idempotent(p), right_idempotent(B(b)));
    }
}

TEST(Algebra, IdempotentActionMatchesCompatibilityTable) {
  // i1 r1 i2 = r1, i2 r2 i1 = r2, i1 r3 i2 = r3,
  // i1 r12 i1 = r12, i2 r23 i2 = r23, i1 r123 i2 = r123
  const auto check = [](int rho, int l, int r) {
    EXPECT_EQ(B(l) * B(rho) * B(r), B(rho)) << kBasisNames[rho];
    EXPECT_TRUE((B(l == basis::i1 ? basis::i2 : basis::i1) * B(rho)).is_zero());
    EXPECT_TRUE((B(rho) * B(r == basis::i1 ? basis::i2 : basis::i1)).is_zero());
  };
  check(basis::r1, basis::i1, basis::i2);
  check(basis::r2, basis::i2, basis::i1);
  check(basis::r3, basis::i1, basis::i2);
  check(basis::r12, basis::i1, basis::i1);
  check(basis::r23, basis::i2, basis::i2);
  check(basis::r123, basis::i1, basis::i2);
}

TEST(Algebra, LabelNamesRoundTrip) {
  for (ReebLabel l : kAllLabels) {
    const auto parsed = parse_label(label_name(l));
    ASSERT_TRUE(parsed.has_value());
    EXPECT_EQ(*parsed, l);
  }
  EXPECT_FALSE(parse_label("r13").has_value());
  EXPECT_FALSE(parse_label("").has_value());
  EXPECT_FALSE(parse_label("rho1").has_value());
}

TEST(Algebra, LabelComposition) {
  EXPECT_EQ(compose_labels(ReebLabel::R2, ReebLabel::R3), ReebLabel::R23);
  EXPECT_EQ(compose_labels(ReebLabel::One, ReebLabel::R12), ReebLabel::R12);
  EXPECT_EQ(compose_labels(ReebLabel::R12, ReebLabel::One), ReebLabel::R12);
  EXPECT_EQ(compose_labels(ReebLabel::One, ReebLabel::One), ReebLabel::One);
  EXPECT_EQ(compose_labels(ReebLabel::R2, ReebLabel::R1), std::nullopt);
  EXPECT_EQ(compose_labels(ReebLabel::R23, ReebLabel::R2), std::nullopt);
}

}  // namespace
