#include "qtwist/scalar.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace qtwist;

namespace {

LaurentScalar r(Exponent e = 1) { return LaurentScalar::r_power(e); }
LaurentScalar s(Exponent e = 1) { return LaurentScalar::s_power(e); }

LaurentScalar random_small(std::mt19937& rng, int terms) {
  std::uniform_int_distribution<int> coeff(-3, 3), expo(-2, 2);
  LaurentScalar out;
  for (int i = 0; i < terms; ++i) out += LaurentScalar::monomial(coeff(rng), expo(rng), Exponent(expo(rng), 2));
  return out;
}

LaurentScalar random_scalar(std::mt19937& rng, int terms = 3) {
  std::uniform_int_distribution<int> coeff(-4, 4), expo(-8, 8);
  LaurentScalar out;
  for (int i = 0; i < terms; ++i)
    out += LaurentScalar::monomial(coeff(rng), Exponent(expo(rng), 4), Exponent(expo(rng), 4));
  return out;
}

}  // namespace

TEST(Scalar, MonomialProduct) {
  EXPECT_EQ(r(Exponent(1, 2)) * s(Exponent(1, 2)), LaurentScalar::monomial(1, Exponent(1, 2), Exponent(1, 2)));
  EXPECT_EQ((r(Exponent(1, 2)) * s(Exponent(1, 2))).str(), "r^(1/2)*s^(1/2)");
}

TEST(Scalar, AdditiveInverse) {
  LaurentScalar x = r() + 3 * s(-2) - 5;
  EXPECT_TRUE((x + (-x)).is_zero());
  EXPECT_EQ((x - x).str(), "0");
}

TEST(Scalar, MonomialInverse) {
  EXPECT_EQ((r() * s(-1)).inverse(), r(-1) * s());
}

TEST(Scalar, InverseOfSumNeedsFractionField) {
  try {
    (r() + s()).inverse();
    FAIL();
  } catch (const std::domain_error& e) {
    EXPECT_NE(std::string(e.what()).find("requires fraction-field elimination"), std::string::npos);
  }
}

TEST(Scalar, QPower) {
  EXPECT_EQ(q_power(2, 8), r() * s(-1));
  EXPECT_EQ(q_power(1, 8), r(Exponent(1, 2)) * s(Exponent(-1, 2)));
  EXPECT_TRUE(q_power(0, 8).is_one());
  EXPECT_THROW(q_power(Exponent(1, 8), 8), std::domain_error);
  for (int a = -6; a <= 6; ++a)
    for (int b = -6; b <= 6; ++b)
      EXPECT_EQ(q_power(Exponent(a, 4), 8) * q_power(Exponent(b, 4), 8), q_power(Exponent(a + b, 4), 8));
}

TEST(Scalar, Specialize) {
  auto a = specialize(r() * s(-1), 4, 1);
  ASSERT_TRUE(a.exact);
  EXPECT_EQ(a.value, 4);
  auto b = specialize(LaurentScalar::q_power(1), 4, 1);
  ASSERT_TRUE(b.exact);
  EXPECT_EQ(b.value, 2);
  auto z = specialize(RationalFunction(), 7, 3);
  ASSERT_TRUE(z.exact);
  EXPECT_EQ(z.value, 0);
  auto irr = specialize(LaurentScalar::q_power(1), 2, 1);
  EXPECT_FALSE(irr.exact);
  EXPECT_FALSE(irr.symbolic.empty());
}

TEST(Scalar, FieldAxioms) {
  std::mt19937 rng(11);
  for (int t = 0; t < 40; ++t) {
    LaurentScalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    LaurentScalar m = random_scalar(rng, 1);
    if (!m.is_zero()) EXPECT_TRUE((m * m.inverse()).is_one());
  }
}

TEST(Scalar, RationalFieldAxioms) {
  std::mt19937 rng(5);
  for (int t = 0; t < 25; ++t) {
    RationalFunction a(random_small(rng, 2), random_small(rng, 2) + 1);
    RationalFunction b(random_small(rng, 2), random_small(rng, 2) + 2);
    RationalFunction c(random_small(rng, 2));
    EXPECT_EQ((a + b) * c, a * c + b * c);
    EXPECT_EQ((a * b) * c, a * (b * c));
    if (!a.is_zero()) EXPECT_TRUE((a * a.inverse()).is_one());
    EXPECT_TRUE((a - a).is_zero());
  }
}

TEST(Scalar, GcdCancellation) {
  RationalFunction x(r(2) - s(2), r() - s());
  EXPECT_TRUE(x.is_polynomial());
  EXPECT_EQ(x.numerator(), r() + s());
  RationalFunction y(r(Exponent(1, 2)) - s(Exponent(1, 2)), r() - s());
  EXPECT_EQ(y, RationalFunction(1, r(Exponent(1, 2)) + s(Exponent(1, 2))));
  RationalFunction z(r(3) * s() - s(4), r(2) * s(3) - s(5));
  EXPECT_EQ(z.str(), "(r^2*s^-2 + r*s^-1 + 1)/(r + s)");
}

TEST(Scalar, CanonicalIdempotent) {
  RationalFunction x(r() + s(), r(2) * s() - s(3));
  RationalFunction y(x.numerator(), x.denominator());
  EXPECT_EQ(x, y);
  EXPECT_EQ(x.str(), y.str());
}

TEST(Scalar, RoundTrip) {
  std::mt19937 rng(3);
  for (int t = 0; t < 30; ++t) {
    RationalFunction x(random_scalar(rng, 3), random_small(rng, 2) + 1);
    EXPECT_EQ(parse_scalar(x.str()), x) << x.str();
    EXPECT_EQ(parse_scalar(x.str()).str(), x.str());
  }
  EXPECT_EQ(parse_scalar("q^(1/2)"), RationalFunction(LaurentScalar::q_power(Exponent(1, 2))));
  EXPECT_EQ(parse_scalar("-3/2*r^-1 + s").str(), "s - 3/2*r^-1");
}

TEST(Scalar, ParseErrors) {
  EXPECT_THROW(parse_scalar("r +"), ParseError);
  EXPECT_THROW(parse_scalar("x"), ParseError);
  EXPECT_THROW(parse_scalar("1/0"), ParseError);
  EXPECT_THROW(parse_scalar("(r+s)^(1/2)"), ParseError);
}

TEST(Scalar, QuantumBinomial) {
  LaurentScalar v = r();
  // [4 choose 2]_v = v^-4 + v^-2 + 2 + v^2 + v^4
  EXPECT_EQ(quantum_binomial(v, 4, 2), r(-4) + r(-2) + 2 + r(2) + r(4));
  EXPECT_EQ(gauss_binomial(v, 3, 1), 1 + r() + r(2));
  EXPECT_EQ(gauss_integer(v, 3), 1 + r() + r(2));
}

TEST(Scalar, GcdContainsCommonFactor) {
  std::mt19937 rng(17);
  for (int t = 0; t < 30; ++t) {
    LaurentScalar a = random_small(rng, 3), b = random_small(rng, 3), c = random_small(rng, 2) + r();
    if (a.is_zero() || b.is_zero() || c.is_zero()) continue;
    LaurentScalar g = polynomial_gcd(a * c, b * c);
    EXPECT_TRUE(exact_divide(g, polynomial_gcd(c, c)).has_value());
    EXPECT_TRUE(exact_divide(a * c, g).has_value());
    EXPECT_TRUE(exact_divide(b * c, g).has_value());
  }
}
