#include <gtest/gtest.h>

#include "helpers.hpp"
#include "wtau/error.hpp"
#include "wtau/param_poly.hpp"

using namespace wtau;
using wtau::testing::random_param_poly;

TEST(Rational, NormalizeExamples) {
  EXPECT_EQ(to_string(rational_normalize(2, 4)), "1/2");
  EXPECT_EQ(to_string(rational_normalize(3, -6)), "-1/2");
  const Rational zero = rational_normalize(0, 7);
  EXPECT_EQ(zero.get_num(), 0);
  EXPECT_EQ(zero.get_den(), 1);
  EXPECT_THROW(rational_normalize(1, 0), DivisionByZero);
  EXPECT_EQ(to_string(ratio(10, -4)), "-5/2");
}

TEST(Rational, ParseAndRender) {
  EXPECT_EQ(parse_rational("-3/6"), Rational(-1, 2));
  EXPECT_EQ(parse_rational("+7"), Rational(7));
  EXPECT_EQ(to_string(parse_rational("21/40")), "21/40");
  EXPECT_THROW(parse_rational("1/0"), DivisionByZero);
  EXPECT_THROW(parse_rational("abc"), ParseError);
  EXPECT_THROW(parse_rational("1/"), ParseError);
  EXPECT_THROW(parse_rational(""), ParseError);
}

TEST(Rational, Combinatorics) {
  EXPECT_EQ(binomial(5, 2), 10);
  EXPECT_EQ(binomial(3, 5), 0);
  EXPECT_EQ(factorial(6), 720);
  EXPECT_EQ(power(Rational(-2, 3), 3), Rational(-8, 27));
  EXPECT_EQ(power(Rational(5), 0), 1);
  EXPECT_EQ(power(Rational(2), -2), Rational(1, 4));
}

TEST(ParamPoly, Examples) {
  const ParamPoly n = ParamPoly::N();
  EXPECT_EQ((n * n).to_string(), "N^2");
  const ParamPoly shift = ParamPoly(ratio(1, 4)) - n * n * ratio(1, 4);
  EXPECT_EQ(shift.to_string(), "1/4 - 1/4*N^2");
  Bindings at0;
  at0.n = Rational(0);
  EXPECT_EQ(shift.substitute(at0), ParamPoly(ratio(1, 4)));
  const ParamPoly cj = ParamPoly(ratio(1, 16)) - n * n * ratio(1, 4);
  Bindings half;
  half.n = ratio(1, 2);
  EXPECT_TRUE(cj.substitute(half).is_zero());
}

TEST(ParamPoly, RenderingAndParsing) {
  EXPECT_EQ(ParamPoly().to_string(), "0");
  EXPECT_EQ(ParamPoly::hbar().to_string(), "h");
  const ParamPoly p = ParamPoly::parse("3/2*N^2*h - 1 + h^2");
  EXPECT_EQ(ParamPoly::parse(p.to_string()), p);
  EXPECT_EQ(ParamPoly::parse("hbar"), ParamPoly::hbar());
  EXPECT_EQ(ParamPoly::parse("-N"), -ParamPoly::N());
  EXPECT_THROW(ParamPoly::parse("N^"), ParseError);
  EXPECT_THROW(ParamPoly::parse("x"), ParseError);
}

TEST(ParamPoly, ZeroCoefficientsNeverStored) {
  ParamPoly p = ParamPoly::N() + ParamPoly(1);
  p -= ParamPoly::N();
  EXPECT_TRUE(p.is_constant());
  EXPECT_EQ(p.terms().size(), 1u);
  p -= ParamPoly(1);
  EXPECT_TRUE(p.is_zero());
}

TEST(ParamPoly, RingAxiomsOnRandomTriples) {
  for (int trial = 0; trial < 200; ++trial) {
    const ParamPoly a = random_param_poly(), b = random_param_poly(), c = random_param_poly();
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a + b, b + a);
    EXPECT_TRUE((a - a).is_zero());
  }
}

TEST(ParamPoly, SubstitutionIsMultiplicative) {
  for (int trial = 0; trial < 200; ++trial) {
    const ParamPoly a = random_param_poly(), b = random_param_poly();
    Bindings bind;
    if (trial % 3 != 1) bind.n = wtau::testing::random_rational();
    if (trial % 3 != 2) bind.hbar = wtau::testing::random_rational();
    EXPECT_EQ((a * b).substitute(bind), a.substitute(bind) * b.substitute(bind));
    const ParamPoly s = a.substitute(bind);
    if (bind.n) EXPECT_EQ(s.max_exponent_n(), 0);
    if (bind.hbar) EXPECT_EQ(s.max_exponent_hbar(), 0);
  }
}
