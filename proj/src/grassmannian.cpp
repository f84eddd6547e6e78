#include "wtau/grassmannian.hpp"

#include <algorithm>
#include <optional>

#include "wtau/error.hpp"

namespace wtau {

ParamPoly BasisVector::phi(int i) const {
  auto it = coefficients.find(-i);
  return it == coefficients.end() ? ParamPoly() : it->second;
}

namespace {

ParamPoly coeff(const Laurent& f, int p) {
  auto it = f.find(p);
  return it == f.end() ? ParamPoly() : it->second;
}

}  // namespace

std::vector<BasisVector> grassmannian_basis(const DiffOp& b, int count, int order) {
  if (!b.in_d_minus()) throw DomainError("operator not in D-: " + b.to_string());
  if (count < 1 || order < 0) throw DomainError("basis size and order must be positive");
  // b = sum b_{s,m} z^{-s} D^m
  std::vector<std::tuple<int, int, ParamPoly>> terms;
  for (const auto& [key, c] : b.terms()) terms.emplace_back(-key.z_power, key.d_power, c);

  std::vector<BasisVector> basis;
  for (int j = 1; j <= count; ++j) {
    BasisVector v;
    v.index = j;
    v.order = order;
    v.coefficients[j - 1] = 1;
    // Nonnegative powers below the leading one fix c_i = sum_m b_{i-1,m} (j-1)^m.
    for (int i = 2; i <= j; ++i) {
      ParamPoly ci;
      for (const auto& [s, m, c] : terms) {
        if (s == i - 1) ci.add_scaled(c, power(Rational(j - 1), m));
      }
      if (!ci.is_zero()) v.c[i] = ci;
    }
    for (int p = -1; p >= -order; --p) {
      ParamPoly rhs;
      for (const auto& [i, ci] : v.c) {
        rhs += ci * coeff(basis[static_cast<std::size_t>(j - i)].coefficients, p);
      }
      for (const auto& [s, m, c] : terms) {
        const ParamPoly a = coeff(v.coefficients, p + s);
        if (a.is_zero()) continue;
        rhs -= c * a * power(Rational(p + s), m);
      }
      rhs *= Rational(Rational(1) / (p - j + 1));
      if (!rhs.is_zero()) v.coefficients[p] = rhs;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

ConstraintReport verify_basis(const DiffOp& b, const std::vector<BasisVector>& basis) {
  ConstraintReport r;
  r.id = "basis-relation";
  r.pass = true;
  r.max_grade = basis.empty() ? 0 : basis.front().order;
  const DiffOp op = DiffOp::D() + b;
  for (const auto& v : basis) {
    Laurent lhs = op.apply(v.coefficients);
    auto sub = [&](const Laurent& f, const ParamPoly& c) {
      for (const auto& [p, x] : f) {
        lhs[p] -= x * c;
        if (lhs[p].is_zero()) lhs.erase(p);
      }
    };
    sub(v.coefficients, v.index - 1);
    for (const auto& [i, ci] : v.c) sub(basis[static_cast<std::size_t>(v.index - i)].coefficients, ci);
    for (const auto& [p, x] : lhs) {
      if (p >= -v.order && !x.is_zero()) {
        r.pass = false;
        r.note = "Phi_" + std::to_string(v.index) + " fails at z^" + std::to_string(p);
        return r;
      }
    }
  }
  return r;
}

namespace {

/// Bivariate polynomial in x, y.
using Bivariate = std::map<std::pair<int, int>, ParamPoly>;

void add_to(Bivariate& f, int i, int j, const ParamPoly& c) {
  if (c.is_zero()) return;
  ParamPoly& slot = f[{i, j}];
  slot += c;
  if (slot.is_zero()) f.erase({i, j});
}

Bivariate times(const Bivariate& a, const Bivariate& b, int max_degree) {
  Bivariate out;
  for (const auto& [ka, ca] : a) {
    for (const auto& [kb, cb] : b) {
      const int i = ka.first + kb.first;
      const int j = ka.second + kb.second;
      if (i + j <= max_degree) add_to(out, i, j, ca * cb);
    }
  }
  return out;
}

/// tau(q_k = sigma (x^k + y^k)) through total degree max_degree.
Bivariate miwa_two_point(const QPolynomial& tau, int sigma, int max_degree) {
  Bivariate out;
  for (const auto& [m, c] : tau.terms()) {
    if (m.grade() > max_degree) continue;
    Bivariate term{{{0, 0}, c}};
    for (int k = 1; k <= m.max_variable(); ++k) {
      Bivariate factor{{{k, 0}, ParamPoly(sigma)}, {{0, k}, ParamPoly(sigma)}};
      for (int e = 0; e < m.exponent(k); ++e) term = times(term, factor, max_degree);
    }
    for (const auto& [k, v] : term) add_to(out, k.first, k.second, v);
  }
  return out;
}

std::optional<std::string> single_point_mismatch(const QPolynomial& tau, const BasisVector& phi1,
                                                 int sigma, int order) {
  std::vector<ParamPoly> lhs(static_cast<std::size_t>(order + 1));
  for (const auto& [m, c] : tau.terms()) {
    if (m.grade() > order) continue;
    ParamPoly v = c;
    if (sigma < 0 && m.degree() % 2) v = -v;
    lhs[static_cast<std::size_t>(m.grade())] += v;
  }
  for (int d = 0; d <= order; ++d) {
    const ParamPoly rhs = d == 0 ? coeff(phi1.coefficients, 0) : phi1.phi(d);
    if (lhs[static_cast<std::size_t>(d)] != rhs) {
      return "x^" + std::to_string(d) + ": " + lhs[static_cast<std::size_t>(d)].to_string() +
             " vs " + rhs.to_string();
    }
  }
  return std::nullopt;
}

/// det(Phi_a(z_b))/(z_2 - z_1) in x = 1/z_1, y = 1/z_2, through total degree order.
Bivariate two_point_determinant(const BasisVector& phi1, const BasisVector& phi2, int order) {
  // F(x) = x Phi_1, G(x) = x Phi_2, both power series in x.
  Bivariate fx, fy, gx, gy;
  for (const auto& [p, c] : phi1.coefficients) {
    if (1 - p <= order + 1) {
      add_to(fx, 1 - p, 0, c);
      add_to(fy, 0, 1 - p, c);
    }
  }
  for (const auto& [p, c] : phi2.coefficients) {
    if (1 - p <= order + 1) {
      add_to(gx, 1 - p, 0, c);
      add_to(gy, 0, 1 - p, c);
    }
  }
  // (F(x) G(y) - F(y) G(x)) / (x y) / ((x - y) / (x y)) = (F(x) G(y) - F(y) G(x)) / (x - y)
  Bivariate num = times(fx, gy, order + 1);
  for (const auto& [k, c] : times(fy, gx, order + 1)) add_to(num, k.first, k.second, -c);
  Bivariate quotient;
  for (int d = 0; d <= order; ++d) {
    ParamPoly carry;
    for (int i = 0; i <= d; ++i) {
      auto it = num.find({i, d + 1 - i});
      const ParamPoly n = it == num.end() ? ParamPoly() : it->second;
      carry = carry - n;
      add_to(quotient, i, d - i, carry);
    }
    auto it = num.find({d + 1, 0});
    const ParamPoly top = it == num.end() ? ParamPoly() : it->second;
    if (top != carry) throw InternalConsistencyError("Miwa determinant not divisible by x - y");
  }
  return quotient;
}

}  // namespace

ConstraintReport miwa_crosscheck(const TauSeries& tau, const std::vector<BasisVector>& basis,
                                 int order) {
  if (basis.empty()) throw DomainError("empty basis");
  if (tau.degree < order) throw DomainError("tau series shorter than the Miwa order");
  ConstraintReport r;
  r.id = "miwa";
  r.max_grade = order;
  const QPolynomial total = tau.total();
  std::optional<int> sigma;
  std::string failure;
  for (int s : {1, -1}) {
    auto mismatch = single_point_mismatch(total, basis.front(), s, order);
    if (!mismatch) {
      sigma = s;
      break;
    }
    if (failure.empty()) failure = "sigma=" + std::to_string(s) + " " + *mismatch;
  }
  if (!sigma) {
    r.pass = false;
    r.note = "single point: no sign works (" + failure + ")";
    return r;
  }
  r.pass = true;
  r.note = "sigma=" + std::to_string(*sigma);
  if (basis.size() >= 2) {
    const Bivariate det = two_point_determinant(basis[0], basis[1], order);
    const Bivariate lhs = miwa_two_point(total, *sigma, order);
    if (det != lhs) {
      r.pass = false;
      r.note += ", two-point determinant mismatch";
    } else {
      r.note += ", two-point determinant ok";
    }
  }
  return r;
}

ConstraintReport check_orthogonality(const std::vector<BasisVector>& a,
                                     const std::vector<BasisVector>& b) {
  ConstraintReport r;
  r.id = "orthogonality";
  r.pass = true;
  for (const auto& u : a) {
    for (const auto& v : b) {
      // The residue needs phi_u up to z^{-v.index} and phi_v up to z^{-u.index}.
      if (v.index > u.order || u.index > v.order) continue;
      const ParamPoly res = residue(multiply(u.coefficients, v.coefficients));
      r.max_grade = std::max(r.max_grade, u.index + v.index);
      if (!res.is_zero()) {
        r.pass = false;
        r.note = "res(A_" + std::to_string(u.index) + " B_" + std::to_string(v.index) +
                 ") = " + res.to_string();
        return r;
      }
    }
  }
  return r;
}

}  // namespace wtau
