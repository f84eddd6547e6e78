#include <gtest/gtest.h>

#include "helpers.hpp"
#include "wtau/error.hpp"

using namespace wtau;
using wtau::testing::q;

TEST(Monomial, GradeAndRendering) {
  const Monomial m = Monomial::parse("q1^3*q3");
  EXPECT_EQ(m.grade(), 6);
  EXPECT_EQ(m.degree(), 4);
  EXPECT_EQ(m.to_string(), "q1^3*q3");
  EXPECT_EQ(Monomial().to_string(), "1");
  EXPECT_EQ(Monomial::parse("1"), Monomial());
  EXPECT_EQ(Monomial::parse("q3*q1^3"), m);
  EXPECT_TRUE(Monomial::parse("q1*q2").has_even_variable());
  EXPECT_THROW(Monomial::parse("q0"), ParseError);
  EXPECT_THROW(Monomial::parse("x1"), ParseError);
}

TEST(QPolynomial, Rendering) {
  QPolynomial p(3);
  p.add_term(Monomial::parse("q3"), ratio(1, 24));
  p.add_term(Monomial::parse("q1^3"), ratio(1, 6));
  EXPECT_EQ(p.to_string(), "1/6*q1^3 + 1/24*q3");
  EXPECT_EQ(QPolynomial(2).to_string(), "0");
}

TEST(QPolynomial, CutoffIsEnforced) {
  QPolynomial p(2);
  EXPECT_THROW(p.add_term(Monomial::variable(3), 1), CutoffError);
  try {
    p.add_term(Monomial::variable(5), 1);
  } catch (const CutoffError& e) {
    EXPECT_EQ(e.variable(), 5);
    EXPECT_EQ(e.cutoff(), 2);
  }
  EXPECT_THROW(q("q1", 2).times_variable(3), CutoffError);
}

TEST(QPolynomial, GradeDecomposition) {
  auto parts = (q("q1^3") + q("q3")).grade_decompose();
  ASSERT_EQ(parts.size(), 1u);
  EXPECT_EQ(parts.at(3), q("q1^3") + q("q3"));
  parts = (q("1") + q("q1")).grade_decompose();
  EXPECT_EQ(parts.size(), 2u);
  EXPECT_EQ(parts.at(0), q("1"));
  EXPECT_EQ(parts.at(1), q("q1"));
  EXPECT_EQ(q("q1*q2").grade_decompose().begin()->first, 3);
}

TEST(QPolynomial, Calculus) {
  const QPolynomial p = q("q1^3*q3") + q("q2");
  EXPECT_EQ(p.derivative(1), q("q1^2*q3") * ParamPoly(3));
  EXPECT_EQ(p.derivative(2), q("1"));
  EXPECT_TRUE(p.derivative(5).is_zero());
  EXPECT_EQ(q("q1").times_variable(1), q("q1^2"));
  EXPECT_EQ(p.odd_part(), q("q1^3*q3"));
  EXPECT_TRUE(p.depends_on_even_variables());
}

TEST(QPolynomial, TruncatedProduct) {
  const QPolynomial a = q("1") + q("q1");
  const QPolynomial sq = a.multiply(a, 1);
  EXPECT_EQ(sq, q("1") + q("q1") * ParamPoly(2));
  EXPECT_EQ(a.multiply(a), q("1") + q("q1") * ParamPoly(2) + q("q1^2"));
}

TEST(QPolynomial, SubstituteAndEquality) {
  QPolynomial p = q("q1") * ParamPoly::N();
  Bindings b;
  b.n = Rational(3);
  EXPECT_EQ(p.substitute(b), q("q1") * ParamPoly(3));
  b.n = Rational(0);
  EXPECT_TRUE(p.substitute(b).is_zero());
  EXPECT_EQ(q("q1", 2), q("q1", 9));
}
