#include "wtau/verify.hpp"

#include <algorithm>
#include <functional>

#include "wtau/error.hpp"
#include "wtau/fermion.hpp"

namespace wtau {

namespace {

ConstraintReport make_report(std::string id, int max_grade, QPolynomial residual) {
  ConstraintReport r;
  r.id = std::move(id);
  r.max_grade = max_grade;
  r.pass = residual.is_zero();
  r.residual = std::move(residual);
  return r;
}

}  // namespace

std::vector<ConstraintReport> check_virasoro(const TauSeries& tau, int m_min, int m_max) {
  const bool kw = tau.model.kind == ModelSpec::Kind::kw ||
                  (tau.model.kind == ModelSpec::Kind::gkm && tau.model.n == 1);
  const bool bgw = tau.model.kind == ModelSpec::Kind::bgw;
  if (!kw && !bgw) throw DomainError("no Virasoro suite for model " + tau.model.to_string());
  if (m_min < (kw ? -1 : 0)) throw DomainError("Virasoro index below the constraint range");
  std::vector<ConstraintReport> out;
  const int wide = tau.degree + 8;
  const QPolynomial total = tau.total().with_cutoff(wide);
  for (int m = m_min; m <= m_max; ++m) {
    const int lowering = kw ? 2 * m + 3 : 2 * m + 1;
    const int window = tau.degree - lowering;
    if (window < 0) {
      throw DomainError("Virasoro m=" + std::to_string(m) + " needs degree >= " +
                        std::to_string(lowering));
    }
    QPolynomial res(wide);
    if (kw) {
      res += apply_node(NodeOp::L(2 * m), total);
      res -= total.derivative(2 * m + 3) * ParamPoly(2 * m + 3);
      if (m == 0) res += total * ParamPoly(ratio(1, 8));
    } else {
      res += apply_node(NodeOp::L(2 * m), total) * ParamPoly(ratio(1, 2));
      res -= total.derivative(2 * m + 1) * ParamPoly(2 * m + 1);
      if (m == 0) {
        res += total * (ParamPoly(ratio(1, 16)) - ParamPoly::N() * ParamPoly::N() * ratio(1, 4));
      }
    }
    out.push_back(make_report("virasoro[m=" + std::to_string(m) + "]", window,
                              res.truncated(window).with_cutoff(std::max(tau.degree, 1))));
  }
  return out;
}

QPolynomial hirota_kp_residual(const QPolynomial& tau, int max_grade, bool naive_times) {
  const int window = max_grade - 4;
  QPolynomial out(tau.cutoff());
  if (window < 0) return out;
  const QPolynomial t = tau.truncated(max_grade);
  auto dt = [&](const QPolynomial& p, int k) {
    QPolynomial d = p.derivative(k);
    if (!naive_times) d *= ParamPoly(k);
    return d;
  };
  auto mul = [&](const QPolynomial& a, const QPolynomial& b) { return a.multiply(b, window); };
  const QPolynomial t1 = dt(t, 1);
  const QPolynomial t11 = dt(t1, 1);
  const QPolynomial t111 = dt(t11, 1);
  const QPolynomial t1111 = dt(t111, 1);
  const QPolynomial t2 = dt(t, 2);
  const QPolynomial t22 = dt(t2, 2);
  const QPolynomial t3 = dt(t, 3);
  const QPolynomial t13 = dt(t1, 3);
  out += mul(t, t1111);
  out -= mul(t1, t111) * ParamPoly(4);
  out += mul(t11, t11) * ParamPoly(3);
  out += (mul(t, t22) - mul(t2, t2)) * ParamPoly(3);
  out -= (mul(t, t13) - mul(t1, t3)) * ParamPoly(4);
  return out;
}

void hirota_self_check() {
  constexpr int kGrade = 9;
  QPolynomial exp_q1(kGrade);
  Rational fact = 1;
  for (int k = 0; k <= kGrade; ++k) {
    if (k > 0) fact *= k;
    exp_q1.add_term(Monomial::variable(1, k), Rational(Rational(1) / fact));
  }
  if (!hirota_kp_residual(exp_q1, kGrade).is_zero()) {
    throw ConfigurationError("Hirota self-check failed on exp(q1)");
  }
  bool naive_fails = false;
  for (int n = 1; n <= 5; ++n) {
    for (const Partition& lambda : partitions_of(n)) {
      const QPolynomial s = schur_polynomial(lambda, kGrade);
      if (!hirota_kp_residual(s, kGrade).is_zero()) {
        throw ConfigurationError("Hirota self-check failed on s" + lambda.to_string());
      }
      if (!hirota_kp_residual(s, kGrade, true).is_zero()) naive_fails = true;
    }
  }
  if (!naive_fails) {
    throw ConfigurationError("Hirota self-check cannot distinguish time conventions");
  }
}

ConstraintReport check_hirota_kp(const TauSeries& tau, int max_grade) {
  hirota_self_check();
  const int top = std::min(max_grade, tau.degree);
  ConstraintReport r = make_report("hirota-kp", top - 4, hirota_kp_residual(tau.total(), top));
  r.note = "times t_k = q_k/k";
  return r;
}

ConstraintReport check_reduction(const TauSeries& tau, int r, bool expect_zero) {
  if (r < 2) throw DomainError("reduction order must be at least 2");
  ConstraintReport report;
  report.id = "reduction[r=" + std::to_string(r) + "]";
  report.max_grade = tau.degree;
  report.pass = true;
  report.residual = QPolynomial(std::max(tau.degree, 1));
  const QPolynomial total = tau.total();
  for (int k = 1; r * k <= tau.degree; ++k) {
    const int v = r * k;
    const ParamPoly c = tau.component(v).coefficient(Monomial::variable(v));
    const int window = tau.degree - v;
    QPolynomial res = total.derivative(v) - total * c;
    res = res.truncated(window);
    if (!report.note.empty()) report.note += ", ";
    report.note += "c" + std::to_string(k) + "=" + c.to_string();
    if (expect_zero && !c.is_zero()) report.pass = false;
    if (!res.is_zero()) {
      if (report.pass) report.residual = res;
      report.pass = false;
    }
  }
  return report;
}

namespace {

using Op = std::function<QPolynomial(const QPolynomial&)>;

QPolynomial lodd(int n, const QPolynomial& p) { return apply_node(NodeOp::L(n).odd(), p); }

/// sum_{i,j odd} q_i q_j Wa_{i+j-shift}, Wa_k = k d/dq_k.
QPolynomial odd_cut(int shift, const QPolynomial& p) {
  static const TupleWeight pattern = [](std::span<const int> a) {
    return Rational(a[0] < 0 && a[1] < 0 && a[2] > 0 ? 1 : 0);
  };
  return apply_normal_ordered(3, -shift, pattern, p, true);
}

ConstraintReport operator_identity(const std::string& id, int max_grade, const Op& lhs,
                                   const Op& rhs) {
  const int cutoff = max_grade + 8;
  QPolynomial residual(cutoff);
  for (int g = 0; g <= max_grade; ++g) {
    for (const Partition& mu : partitions_of(g)) {
      if (std::any_of(mu.parts().begin(), mu.parts().end(), [](int p) { return p % 2 == 0; })) {
        continue;
      }
      std::vector<int> exps(static_cast<std::size_t>(std::max(g, 1)), 0);
      for (int p : mu.parts()) ++exps[static_cast<std::size_t>(p - 1)];
      const QPolynomial m = QPolynomial::from_monomial(Monomial(exps), 1, cutoff);
      QPolynomial diff = lhs(m) - rhs(m);
      if (!diff.is_zero()) {
        residual += diff;
      }
    }
  }
  return make_report(id, max_grade, residual);
}

}  // namespace

std::vector<ConstraintReport> check_odd_node_identities(int max_grade) {
  std::vector<ConstraintReport> out;
  // Qodd[-2] = 2 sum_{m>=0} Lodd[-2m-2] Lodd[2m]
  out.push_back(operator_identity(
      "Qodd[-2] = 2*sum Lodd[-2m-2]*Lodd[2m]", max_grade,
      [](const QPolynomial& p) { return apply_node(NodeOp::Q(-2).odd(), p); },
      [max_grade](const QPolynomial& p) {
        QPolynomial acc(p.cutoff());
        for (int m = 0; 2 * m <= max_grade; ++m) acc += lodd(-2 * m - 2, lodd(2 * m, p));
        return acc * ParamPoly(2);
      }));
  // Qodd[-6]/2 + 21/40 Lodd[-6] = sum_{m>=-1} Lodd[-2m-6] Lodd[2m] + 1/8 Lodd[-6]
  out.push_back(operator_identity(
      "Qodd[-6]/2 + 21/40*Lodd[-6] = sum Lodd[-2m-6]*Lodd[2m] + 1/8*Lodd[-6]", max_grade,
      [](const QPolynomial& p) {
        return apply_node(NodeOp::Q(-6).odd(), p) * ParamPoly(ratio(1, 2)) +
               lodd(-6, p) * ParamPoly(ratio(21, 40));
      },
      [max_grade](const QPolynomial& p) {
        QPolynomial acc(p.cutoff());
        for (int m = -1; 2 * m <= max_grade; ++m) acc += lodd(-2 * m - 6, lodd(2 * m, p));
        return acc + lodd(-6, p) * ParamPoly(ratio(1, 8));
      }));
  // sum_{m>=0} Lodd[-2m-2] Wa_{2m+1} = Modd[-1] - 1/2 sum q_i q_j Wa_{i+j-1}
  out.push_back(operator_identity(
      "sum Lodd[-2m-2]*Wa[2m+1] = Modd[-1] - 1/2*sum q_i*q_j*Wa[i+j-1]", max_grade,
      [max_grade](const QPolynomial& p) {
        QPolynomial acc(p.cutoff());
        for (int m = 0; 2 * m + 1 <= max_grade; ++m) {
          acc += lodd(-2 * m - 2, apply_node(NodeOp::alpha(2 * m + 1), p));
        }
        return acc;
      },
      [](const QPolynomial& p) {
        return apply_node(NodeOp::M(-1).odd(), p) - odd_cut(1, p) * ParamPoly(ratio(1, 2));
      }));
  // sum_{m>=-1} Lodd[-2m-6] Wa_{2m+3} = Modd[-3] - 1/2 sum_{i+j>3} q_i q_j Wa_{i+j-3} - q1^3/3
  out.push_back(operator_identity(
      "sum Lodd[-2m-6]*Wa[2m+3] = Modd[-3] - 1/2*sum q_i*q_j*Wa[i+j-3] - 1/3*q1^3", max_grade,
      [max_grade](const QPolynomial& p) {
        QPolynomial acc(p.cutoff());
        for (int m = -1; 2 * m + 3 <= max_grade; ++m) {
          acc += lodd(-2 * m - 6, apply_node(NodeOp::alpha(2 * m + 3), p));
        }
        return acc;
      },
      [](const QPolynomial& p) {
        QPolynomial cube = QPolynomial::from_monomial(Monomial::variable(1, 3), ratio(1, 3),
                                                      p.cutoff());
        return apply_node(NodeOp::M(-3).odd(), p) - odd_cut(3, p) * ParamPoly(ratio(1, 2)) -
               p.multiply(cube);
      }));
  return out;
}

}  // namespace wtau
