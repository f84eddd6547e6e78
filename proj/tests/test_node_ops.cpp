#include <gtest/gtest.h>

#include "helpers.hpp"
#include "wtau/error.hpp"
#include "wtau/node_ops.hpp"

using namespace wtau;
using namespace wtau::testing;

namespace {

constexpr int kCutoff = 20;

QPolynomial commutator(const NodeOp& a, const NodeOp& b, const QPolynomial& p) {
  return apply_node(a, apply_node(b, p)) - apply_node(b, apply_node(a, p));
}

}  // namespace

TEST(NodeOps, Examples) {
  const QPolynomial one = QPolynomial::one(kCutoff);
  EXPECT_EQ(apply_node(NodeOp::L(-2), one), q("q1^2", kCutoff) * ParamPoly(ratio(1, 2)));
  EXPECT_EQ(apply_node(NodeOp::M(-3), one), q("q1^3", kCutoff) * ParamPoly(ratio(1, 3)));
  EXPECT_TRUE(apply_node(NodeOp::Q(-2), one).is_zero());
  EXPECT_EQ(apply_node(NodeOp::alpha(-3), q("q1", kCutoff)), q("q1*q3", kCutoff));
  EXPECT_EQ(apply_node(NodeOp::alpha(3), q("q3", kCutoff)), ParamPoly(3) * one);
  EXPECT_TRUE(apply_node(NodeOp::alpha(0), q("q1", kCutoff)).is_zero());
}

TEST(NodeOps, Rendering) {
  EXPECT_EQ(NodeOp::L(-2).odd().to_string(), "Lodd[-2]");
  EXPECT_EQ(NodeOp::Q(-6).to_string(), "Q[-6]");
  EXPECT_EQ(NodeOp::alpha(3).to_string(), "alpha[3]");
}

TEST(NodeOps, CutoffOverflowIsAnError) {
  EXPECT_THROW(apply_node(NodeOp::alpha(-4), QPolynomial::one(3)), CutoffError);
  EXPECT_THROW(apply_node(NodeOp::L(-2), q("q3", 4)), CutoffError);
}

TEST(NodeOps, Heisenberg) {
  for (const QPolynomial& p : all_monomials(10, kCutoff)) {
    for (int m = -4; m <= 4; ++m) {
      for (int n = -4; n <= 4; ++n) {
        QPolynomial expected(kCutoff);
        if (m + n == 0) expected = p * ParamPoly(m);
        ASSERT_EQ(commutator(NodeOp::alpha(m), NodeOp::alpha(n), p), expected)
            << m << " " << n << " on " << p.to_string();
      }
    }
  }
}

TEST(NodeOps, VirasoroCentralConstantsFromBruteForce) {
  // The central term is read off the vacuum, then compared with (m^3 - m)/12.
  const QPolynomial one = QPolynomial::one(kCutoff);
  EXPECT_EQ(commutator(NodeOp::L(2), NodeOp::L(-2), one), ParamPoly(ratio(1, 2)) * one);
  for (int m = 1; m <= 4; ++m) {
    const QPolynomial c = commutator(NodeOp::L(m), NodeOp::L(-m), one);
    EXPECT_EQ(c, ParamPoly(ratio(m * m * m - m, 12)) * one) << m;
  }
}

TEST(NodeOps, VirasoroAlgebra) {
  for (const QPolynomial& p : all_monomials(8, kCutoff)) {
    for (int m = -4; m <= 4; ++m) {
      for (int n = -4; n <= 4; ++n) {
        QPolynomial expected = apply_node(NodeOp::L(m + n), p) * ParamPoly(m - n);
        if (m + n == 0) expected += p * ParamPoly(ratio(m * m * m - m, 12));
        ASSERT_EQ(commutator(NodeOp::L(m), NodeOp::L(n), p), expected)
            << m << " " << n << " on " << p.to_string();
      }
    }
  }
}

TEST(NodeOps, VirasoroActsOnHeisenberg) {
  for (const QPolynomial& p : all_monomials(8, kCutoff)) {
    for (int m = -4; m <= 4; ++m) {
      for (int n = -4; n <= 4; ++n) {
        ASSERT_EQ(commutator(NodeOp::L(m), NodeOp::alpha(n), p),
                  apply_node(NodeOp::alpha(m + n), p) * ParamPoly(-n))
            << m << " " << n << " on " << p.to_string();
      }
    }
  }
}

TEST(NodeOps, LIsHalfNormalOrderedSquare) {
  const TupleWeight half = [](std::span<const int>) { return ratio(1, 2); };
  for (const QPolynomial& p : all_monomials(7, kCutoff)) {
    for (int n = -6; n <= 6; ++n) {
      ASSERT_EQ(apply_node(NodeOp::L(n), p), apply_normal_ordered(2, n, half, p)) << n;
    }
  }
}

TEST(NodeOps, MIsThirdNormalOrderedCube) {
  const TupleWeight third = [](std::span<const int>) { return ratio(1, 3); };
  for (const QPolynomial& p : all_monomials(7, kCutoff)) {
    for (int n = -6; n <= 6; ++n) {
      ASSERT_EQ(apply_node(NodeOp::M(n), p), apply_normal_ordered(3, n, third, p)) << n;
    }
  }
}

TEST(NodeOps, QOnVacuumMatchesCreationOnlyExpansion) {
  // On 1 only pure-creation tuples survive; enumerate them directly.
  const QPolynomial one = QPolynomial::one(kCutoff);
  for (int n = -1; n >= -8; --n) {
    QPolynomial expected(kCutoff);
    for (int a = 1; a < -n; ++a) {
      for (int b = 1; a + b < -n; ++b) {
        for (int c = 1; a + b + c < -n; ++c) {
          const int d = -n - a - b - c;
          Monomial m = Monomial::variable(a).times(Monomial::variable(b));
          m = m.times(Monomial::variable(c)).times(Monomial::variable(d));
          expected.add_term(m, ratio(1, 4));
        }
      }
    }
    for (int a = 1; a < -n; ++a) {
      const int b = -n - a;
      const Monomial m = Monomial::variable(a).times(Monomial::variable(b));
      expected.add_term(m, ratio(-(1 - a) * (1 - b), 4));
      expected.add_term(m, ratio((n + 2) * (n + 3), 20));
    }
    EXPECT_EQ(apply_node(NodeOp::Q(n), one), expected) << n;
  }
}

TEST(NodeOps, OddReductionConsistency) {
  for (const QPolynomial& p : all_monomials(8, kCutoff, true)) {
    for (int n = -6; n <= 6; ++n) {
      for (NodeKind kind : {NodeKind::alpha, NodeKind::L, NodeKind::M, NodeKind::Q}) {
        const NodeOp op{kind, n, false};
        ASSERT_EQ(apply_node(op.odd(), p), apply_node(op, p).odd_part())
            << op.to_string() << " on " << p.to_string();
      }
    }
  }
}

TEST(NodeOps, GradeShift) {
  for (const QPolynomial& p : all_monomials(6, kCutoff)) {
    for (int n = -6; n <= 6; ++n) {
      for (NodeKind kind : {NodeKind::alpha, NodeKind::L, NodeKind::M, NodeKind::Q}) {
        const NodeOp op{kind, n, false};
        const QPolynomial r = apply_node(op, p);
        if (r.is_zero()) continue;
        EXPECT_EQ(r.min_grade(), p.min_grade() - n);
        EXPECT_EQ(r.max_grade(), p.min_grade() - n);
      }
    }
  }
}
