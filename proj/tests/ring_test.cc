#include <gtest/gtest.h>

#include "flowcat/laurent_poly.hpp"
#include "support/random_terms.hpp"

namespace flowcat {
namespace {

const Field Q = Field::rationals();

LaurentPoly P(const char* text, Field field = Q) { return LaurentPoly::parse(text, field); }

GTEST_TEST(FieldTest, RationalsStayReduced) {
  Scalar a = Q.parse_scalar("6/4");
  EXPECT_EQ(a.to_string(), "3/2");
  EXPECT_EQ((a - a).to_string(), "0");
  EXPECT_EQ(Q.parse_scalar("-2/4").to_string(), "-1/2");
  EXPECT_THROW(Q.parse_scalar("-2/-4"), std::invalid_argument);
  EXPECT_THROW(Q.zero().inverse(), std::domain_error);
}

GTEST_TEST(FieldTest, PrimeResidues) {
  const Field z5 = Field::prime(5);
  EXPECT_EQ(z5.from_int(-1).to_string(), "4");
  EXPECT_EQ(z5.parse_scalar("1/2").to_string(), "3");
  EXPECT_TRUE((z5.from_int(3) * z5.from_int(3).inverse()).is_one());
  EXPECT_THROW(Field::prime(6), std::invalid_argument);
  EXPECT_THROW(z5.parse_scalar("1/5"), std::domain_error);
  EXPECT_EQ(Field::parse("zp:7"), Field::prime(7));
  EXPECT_EQ(Field::parse("q"), Q);
}

GTEST_TEST(FieldTest, CharacteristicTwoCollapsesSigns) {
  const Field z2 = Field::prime(2);
  EXPECT_EQ(z2.from_int(-1), z2.one());
}

GTEST_TEST(FieldTest, MixingFieldsThrows) {
  EXPECT_THROW(Q.one() + Field::prime(3).one(), std::invalid_argument);
}

GTEST_TEST(LaurentPolyTest, ParseAndPrint) {
  EXPECT_EQ(P("3/2*s^-1 + s^2 - 1").to_string(), "s^2 - 1 + 3/2*s^-1");
  EXPECT_EQ(P("2s").to_string(), "2*s");
  EXPECT_EQ(P("s - s").to_string(), "0");
  EXPECT_THROW(P("-(s)"), std::invalid_argument);
  EXPECT_EQ(P(P("s^3 - 2/3*s^-2 + 5").to_string().c_str()), P("s^3 - 2/3*s^-2 + 5"));
  EXPECT_THROW(P("s^"), std::invalid_argument);
  EXPECT_THROW(P("1 +"), std::invalid_argument);
}

GTEST_TEST(LaurentPolyTest, Arithmetic) {
  EXPECT_EQ(P("s + 1") * P("s - 1"), P("s^2 - 1"));
  EXPECT_EQ(P("s + 1") + LaurentPoly::zero(Q), P("s + 1"));
  // 3s^-3 - (22/7)s^-1 + s^2, shifted by s^3
  EXPECT_EQ(P("3*s^-3 - 22/7*s^-1 + s^2") * P("s^3"), P("3 - 22/7*s^2 + s^5"));
  EXPECT_EQ(P("s") * P("s^-1"), LaurentPoly::one(Q));
  EXPECT_EQ(P("s^2 + s").span(), 1u);
  EXPECT_TRUE(P("-4*s^7").is_unit());
  EXPECT_EQ(P("2*s^-1").unit_inverse(), P("1/2*s"));
}

GTEST_TEST(LaurentPolyTest, DivremExamples) {
  DivRem a = divrem(P("s^2 - 1"), P("s + 1"));
  EXPECT_EQ(a.quotient, P("s - 1"));
  EXPECT_TRUE(a.remainder.is_zero());

  // s is a unit, so nothing remains.
  DivRem b = divrem(P("s + 1"), P("s"));
  EXPECT_TRUE(b.remainder.is_zero());
  EXPECT_EQ(b.quotient * P("s"), P("s + 1"));

  DivRem c = divrem(P("s^2 + 1"), P("s + 1"));
  EXPECT_EQ(c.quotient * P("s + 1") + c.remainder, P("s^2 + 1"));
  EXPECT_EQ(c.remainder.span(), 0u);
  EXPECT_FALSE(c.remainder.is_zero());

  EXPECT_THROW(divrem(P("s"), LaurentPoly::zero(Q)), std::domain_error);
}

GTEST_TEST(LaurentPolyTest, GcdExamples) {
  ExtendedGcd g = gcd_ext(P("s + 1"), P("s + 1"));
  EXPECT_EQ(g.gcd, P("s + 1"));

  ExtendedGcd h = gcd_ext(P("2*s^-1 + 2"), LaurentPoly::zero(Q));
  EXPECT_EQ(h.gcd, P("s + 1"));

  ExtendedGcd k = gcd_ext(P("s"), P("s + 1"));
  EXPECT_EQ(k.gcd, LaurentPoly::one(Q));
  EXPECT_EQ(k.x * P("s") + k.y * P("s + 1"), k.gcd);

  EXPECT_THROW(gcd_ext(LaurentPoly::zero(Q), LaurentPoly::zero(Q)), std::domain_error);
}

GTEST_TEST(LaurentPolyTest, CanonicalAssociateExamples) {
  AssociateSplit a = canonical_associate(P("2*s^-1 + 2"));
  EXPECT_EQ(a.unit, P("2*s^-1"));
  EXPECT_EQ(a.rep, P("s + 1"));

  AssociateSplit b = canonical_associate(P("s^3"));
  EXPECT_EQ(b.unit, P("s^3"));
  EXPECT_EQ(b.rep, LaurentPoly::one(Q));

  AssociateSplit c = canonical_associate(P("-3*s^2 - 3*s^5"));
  EXPECT_EQ(c.unit, P("-3*s^2"));
  EXPECT_EQ(c.rep, P("s^3 + 1"));
  EXPECT_EQ(c.unit * c.rep, P("-3*s^2 - 3*s^5"));

  EXPECT_THROW(canonical_associate(LaurentPoly::zero(Q)), std::domain_error);
}

GTEST_TEST(LaurentPolyTest, ReduceModGivesCanonicalResidues) {
  const LaurentPoly m = P("s^2 + s + 1");
  const LaurentPoly a = P("s^5 - 3*s^-2 + 7");
  const LaurentPoly r = reduce_mod(a, m);
  EXPECT_TRUE(divides(m, a - r));
  EXPECT_LT(r.span(), m.span());
  EXPECT_GE(r.low_exponent(), 0);
  // Residues of congruent inputs coincide.
  EXPECT_EQ(reduce_mod(a + m * P("s^-4 - 2*s"), m), r);
}

class RingPropertyTest : public ::testing::TestWithParam<Field> {};

TEST_P(RingPropertyTest, AxiomsOnRandomSamples) {
  const Field field = GetParam();
  testing::Rng rng(11);
  for (int iter = 0; iter < 200; ++iter) {
    LaurentPoly a = testing::random_poly(rng, field, 4, 0.1);
    LaurentPoly b = testing::random_poly(rng, field, 4, 0.1);
    LaurentPoly c = testing::random_poly(rng, field, 4, 0.1);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a + b, b + a);
    EXPECT_TRUE((a - a).is_zero());
  }
}

TEST_P(RingPropertyTest, EuclideanStructure) {
  const Field field = GetParam();
  testing::Rng rng(12);
  for (int iter = 0; iter < 200; ++iter) {
    LaurentPoly a = testing::random_poly(rng, field, 5, 0.1);
    LaurentPoly b = testing::random_poly(rng, field, 3);
    DivRem qr = divrem(a, b);
    EXPECT_EQ(qr.quotient * b + qr.remainder, a);
    EXPECT_TRUE(qr.remainder.is_zero() || qr.remainder.span() < b.span());

    if (a.is_zero()) continue;
    ExtendedGcd g = gcd_ext(a, b);
    EXPECT_EQ(g.x * a + g.y * b, g.gcd);
    EXPECT_TRUE(divides(g.gcd, a));
    EXPECT_TRUE(divides(g.gcd, b));
    EXPECT_EQ(normalize_associate(g.gcd), g.gcd);

    AssociateSplit s = canonical_associate(a);
    EXPECT_EQ(s.unit * s.rep, a);
    EXPECT_TRUE(s.unit.is_unit());
    EXPECT_EQ(canonical_associate(s.rep).rep, s.rep);
    EXPECT_EQ(canonical_associate(a * P("3*s^3", field)).rep, s.rep);
  }
}

INSTANTIATE_TEST_SUITE_P(Fields, RingPropertyTest, ::testing::Values(Field::rationals(), Field::prime(2), Field::prime(7)),
                         [](const auto& info) {
                           return info.param.is_rational() ? std::string("Q")
                                                           : "Z" + std::to_string(info.param.characteristic());
                         });

}  // namespace
}  // namespace flowcat
