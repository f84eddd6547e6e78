#include <gtest/gtest.h>

#include "helpers.hpp"
#include "wtau/error.hpp"
#include "wtau/model_ops.hpp"

using namespace wtau;
using namespace wtau::testing;

namespace {

/// Oracle: two operators are equal iff they act identically on z^k for enough k.
void expect_same_action(const DiffOp& a, const DiffOp& b) {
  for (int k = -12; k <= 12; ++k) {
    Laurent f{{k, ParamPoly(1)}};
    EXPECT_EQ(a.apply(f), b.apply(f)) << "on z^" << k;
  }
}

Laurent apply_twice(const DiffOp& a, const DiffOp& b, const Laurent& f) { return a.apply(b.apply(f)); }

const DiffOp half = DiffOp::constant(ratio(1, 2));

}  // namespace

TEST(DiffOp, ProductExamples) {
  const DiffOp dz = DiffOp::D() * DiffOp::z();
  EXPECT_EQ(dz.coefficient(1, 1), ParamPoly(1));
  EXPECT_EQ(dz.coefficient(1, 0), ParamPoly(1));
  EXPECT_EQ(dz.terms().size(), 2u);

  const DiffOp a = DiffOp::monomial(-1, 1);
  EXPECT_EQ(a * a, DiffOp::monomial(-2, 2) - DiffOp::monomial(-2, 1));
}

TEST(DiffOp, ProductMatchesCompositionOfActions) {
  for (int trial = 0; trial < 100; ++trial) {
    const DiffOp a = random_diffop(3, -4, 3, 3);
    const DiffOp b = random_diffop(3, -4, 3, 3);
    const DiffOp ab = a * b;
    for (int k = -8; k <= 8; ++k) {
      Laurent f{{k, ParamPoly(1)}};
      EXPECT_EQ(ab.apply(f), apply_twice(a, b, f));
    }
  }
}

TEST(DiffOp, Associativity) {
  for (int trial = 0; trial < 50; ++trial) {
    const DiffOp a = random_diffop(3, -3, 3, 2), b = random_diffop(3, -3, 3, 2),
                 c = random_diffop(3, -3, 3, 2);
    EXPECT_EQ((a * b) * c, a * (b * c));
  }
}

TEST(DiffOp, AdjointExamples) {
  for (int n = -6; n <= 6; ++n) EXPECT_EQ(DiffOp::z(n).adjoint(), DiffOp::z(n));
  EXPECT_EQ(DiffOp::monomial(-1, 1).adjoint(), DiffOp::monomial(-1, 1, -1));
  EXPECT_EQ(DiffOp::monomial(-3, 1).adjoint(),
            DiffOp::monomial(-3, 1, -1) + DiffOp::monomial(-3, 0, 2));
}

TEST(DiffOp, AdjointSatisfiesResiduePairing) {
  for (int trial = 0; trial < 200; ++trial) {
    const DiffOp a = random_diffop(uniform(1, 4), -5, 5, 3);
    const Laurent f = random_laurent(-6, 6, 6);
    const Laurent g = random_laurent(-6, 6, 6);
    EXPECT_EQ(residue(multiply(f, a.apply(g))), residue(multiply(g, a.adjoint().apply(f))));
  }
}

TEST(DiffOp, AdjointIsInvolutiveAntiAutomorphism) {
  for (int trial = 0; trial < 50; ++trial) {
    const DiffOp a = random_diffop(3, -4, 4, 3), b = random_diffop(3, -4, 4, 3);
    EXPECT_EQ(a.adjoint().adjoint(), a);
    EXPECT_EQ((a * b).adjoint(), b.adjoint() * a.adjoint());
  }
}

TEST(DiffOp, ToDForm) {
  EXPECT_EQ(to_D_form(0, 1), DiffOp::monomial(-1, 1));
  EXPECT_EQ(to_D_form(1, 1), DiffOp::D());
  EXPECT_EQ(to_D_form(0, 2), DiffOp::monomial(-2, 2) - DiffOp::monomial(-2, 1));
  // z^n d^k z^m = m (m-1) ... (m-k+1) z^{n+m-k}
  for (int n = -3; n <= 3; ++n) {
    for (int k = 0; k <= 4; ++k) {
      for (int m = -5; m <= 5; ++m) {
        Rational falling = 1;
        for (int i = 0; i < k; ++i) falling *= m - i;
        Laurent expected;
        if (falling != 0) expected[n + m - k] = falling;
        EXPECT_EQ(to_D_form(n, k).apply(Laurent{{m, ParamPoly(1)}}), expected);
      }
    }
  }
}

TEST(DiffOp, Rendering) {
  const DiffOp r = build_gkm_ops(1).R;
  EXPECT_EQ(r.to_string(),
            "-3/2*z^-3*D^2 + 3*z^-3*D - 5/8*z^-3 + 1/2*z^-6*D^3 - 15/4*z^-6*D^2 + 59/8*z^-6*D - "
            "45/16*z^-6");
  EXPECT_EQ(DiffOp().to_string(), "0");
  EXPECT_EQ((DiffOp::D() * ParamPoly::N() + DiffOp::constant(1)).to_string(), "N*D + 1");
}

TEST(ModelOps, KwAdjointProduct) {
  const ModelOperators ops = build_gkm_ops(1);
  const DiffOp k_star = DiffOp::z() - DiffOp::z(-2) * (DiffOp::D() - half);
  const DiffOp shifted = DiffOp::z(-2) * (DiffOp::D() - half);
  const DiffOp p_star = -DiffOp::monomial(-1, 1) + shifted * shifted * ParamPoly(ratio(1, 2));
  EXPECT_EQ(ops.K_adjoint, k_star);
  EXPECT_EQ(ops.P_adjoint, p_star);
  const DiffOp expected = -DiffOp::D() + DiffOp::monomial(-3, 2, ratio(3, 2)) -
                          DiffOp::monomial(-3, 1, 3) + DiffOp::monomial(-3, 0, ratio(5, 8)) -
                          DiffOp::monomial(-6, 3, ratio(1, 2)) +
                          DiffOp::monomial(-6, 2, ratio(15, 4)) -
                          DiffOp::monomial(-6, 1, ratio(59, 8)) +
                          DiffOp::monomial(-6, 0, ratio(45, 16));
  EXPECT_EQ(k_star * p_star, expected);
  EXPECT_EQ(ops.X, DiffOp::monomial(2, 0, ratio(1, 2)));
}

TEST(ModelOps, GkmRMatchesClosedProduct) {
  for (int n = 1; n <= 4; ++n) {
    const DiffOp r = build_gkm_ops(n).R;
    EXPECT_TRUE(r.in_d_minus()) << n;
    EXPECT_EQ(r, gkm_r_closed_form(n)) << n;
    for (const auto& [k, comp] : r.grade_components()) EXPECT_GE(k, 1);
  }
}

TEST(ModelOps, BgwAdjoint) {
  const ModelOperators ops = build_bgw_ops();
  const ParamPoly h = ParamPoly::hbar();
  const ParamPoly n2 = ParamPoly::N() * ParamPoly::N();
  const DiffOp shifted = DiffOp::z(-2) * (DiffOp::D() - half) * (DiffOp::D() - half);
  const DiffOp expected = shifted * (h * h * ratio(1, 4)) - DiffOp::monomial(-1, 1, h) -
                          DiffOp::monomial(-2, 0, n2 * h * h * ratio(1, 4));
  EXPECT_EQ(ops.P_adjoint, expected);
  EXPECT_TRUE(ops.R.in_d_minus());
  // Grade k of R_N carries exactly h^k.
  for (const auto& [k, comp] : ops.R.grade_components()) {
    for (const auto& [key, c] : comp.terms()) {
      for (const auto& [e, v] : c.terms()) EXPECT_EQ(e.hbar, k);
    }
  }
}

TEST(ModelOps, ParseModels) {
  EXPECT_EQ(ModelSpec::parse("kw"), ModelSpec::kw());
  EXPECT_EQ(ModelSpec::parse("bgw"), ModelSpec::bgw());
  EXPECT_EQ(ModelSpec::parse("gkm:3"), ModelSpec::gkm(3));
  EXPECT_EQ(ModelSpec::gkm(2).to_string(), "gkm:2");
  EXPECT_THROW(ModelSpec::parse("gkm:0"), ParseError);
  EXPECT_THROW(ModelSpec::parse("gkm:"), ParseError);
  EXPECT_THROW(ModelSpec::parse("kdv"), ParseError);
}
