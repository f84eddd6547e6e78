#include "wtau/tau.hpp"

#include <algorithm>

#include "wtau/error.hpp"
#include "wtau/fermion.hpp"

namespace wtau {

std::string to_string(Engine e) {
  switch (e) {
    case Engine::nodes:
      return "nodes";
    case Engine::fermionic:
      return "fermionic";
    case Engine::cutjoin:
      return "cutjoin";
  }
  return "?";
}

Engine parse_engine(std::string_view text) {
  if (text == "nodes") return Engine::nodes;
  if (text == "fermionic") return Engine::fermionic;
  if (text == "cutjoin") return Engine::cutjoin;
  throw ParseError("unknown engine '" + std::string(text) + "'");
}

const QPolynomial& TauSeries::component(int d) const {
  auto it = components.find(d);
  if (it == components.end()) throw DomainError("grade " + std::to_string(d) + " not computed");
  return it->second;
}

QPolynomial TauSeries::total() const {
  QPolynomial out(std::max(degree, 1));
  for (const auto& [d, c] : components) out += c;
  return out;
}

QPolynomial TauSeries::with_hbar() const {
  QPolynomial out(std::max(degree, 1));
  for (const auto& [d, c] : components) {
    out += c * ParamPoly::monomial(1, 0, d);
  }
  return out;
}

namespace {

int cutoff_for(int degree) { return std::max(degree, 1); }

TauSeries from_total(const QPolynomial& total, int degree) {
  TauSeries t;
  t.degree = degree;
  for (int d = 0; d <= degree; ++d) t.components.emplace(d, QPolynomial(cutoff_for(degree)));
  for (const auto& [d, part] : total.grade_decompose()) {
    if (d <= degree) t.components.at(d) = part;
  }
  return t;
}

}  // namespace

TauSeries oe_solve(const GradedOperator& w, int degree) {
  if (degree < 0) throw DomainError("degree must be non-negative");
  const int cutoff = cutoff_for(degree);
  TauSeries t;
  t.degree = degree;
  t.components.emplace(0, QPolynomial::one(cutoff));
  for (int d = 1; d <= degree; ++d) {
    QPolynomial acc(cutoff);
    for (const auto& [k, comp] : w.components()) {
      if (k > d) break;
      const QPolynomial& prev = t.components.at(d - k);
      if (!prev.is_zero()) acc += apply_component(comp, prev);
    }
    acc *= ParamPoly(ratio(1, d));
    t.components.emplace(d, std::move(acc));
  }
  return t;
}

std::map<int, DiffOp> fermionic_components(const ModelSpec& model) {
  const DiffOp r = build_model_ops(model.kind == ModelSpec::Kind::kw ? ModelSpec::gkm(1) : model).R;
  if (!r.in_d_minus()) throw InternalConsistencyError("model operator not in D-: " + r.to_string());
  std::map<int, DiffOp> out;
  const bool scaled = model.kind == ModelSpec::Kind::bgw;
  for (const auto& [k, comp] : r.grade_components()) {
    const int expected = scaled ? k : 0;
    DiffOp stripped;
    for (const auto& [key, c] : comp.terms()) {
      ParamPoly coef;
      for (const auto& [e, v] : c.terms()) {
        if (e.hbar != expected) {
          throw InternalConsistencyError("grade " + std::to_string(k) + " component of R carries h^" +
                                         std::to_string(e.hbar) + ", expected h^" +
                                         std::to_string(expected));
        }
        coef += ParamPoly::monomial(v, e.n, 0);
      }
      stripped += DiffOp::monomial(key.z_power, key.d_power, coef);
    }
    if (!stripped.is_zero()) out.emplace(k, std::move(stripped));
  }
  return out;
}

TauSeries oe_solve_fermionic(const std::map<int, DiffOp>& components, int degree) {
  if (degree < 0) throw DomainError("degree must be non-negative");
  for (const auto& [k, a] : components) {
    if (k < 1) throw DomainError("grade-0 component makes the recursion ill-posed");
  }
  const FermionEngine& engine = FermionEngine::shared();
  std::vector<FermionState> states;
  states.push_back(FermionState::vacuum());
  for (int d = 1; d <= degree; ++d) {
    FermionState acc;
    for (const auto& [k, a] : components) {
      if (k > d) break;
      const FermionState& prev = states[static_cast<std::size_t>(d - k)];
      if (!prev.is_zero()) acc += engine.onebody_apply(a, prev);
    }
    acc *= ParamPoly(ratio(1, d));
    states.push_back(std::move(acc));
  }
  TauSeries t;
  t.degree = degree;
  for (int d = 0; d <= degree; ++d) {
    t.components.emplace(d, fermion_to_boson(states[static_cast<std::size_t>(d)],
                                             cutoff_for(degree)));
  }
  return t;
}

namespace {

/// a * sum_{i,j odd, i+j-s >= 1} q_i q_j Wa_{i+j-s} + b * sum_{i,j odd} q_{i+j+s} Wa_i Wa_j,
/// with Wa_k = k d/dq_k.
void cut_and_join_terms(const Rational& a, int s, const Rational& b, const Monomial& m,
                        const ParamPoly& c, QPolynomial& out) {
  const std::vector<int>& e = m.exponents();
  const int top = static_cast<int>(e.size());
  auto with = [&](std::vector<int> exps, std::initializer_list<std::pair<int, int>> changes) {
    for (auto [k, delta] : changes) {
      if (k > static_cast<int>(exps.size())) exps.resize(static_cast<std::size_t>(k), 0);
      exps[static_cast<std::size_t>(k - 1)] += delta;
    }
    return Monomial(std::move(exps));
  };
  // cut: q_k -> q_i q_j with i + j = k + s
  for (int k = 1; k <= top; k += 2) {
    const int ek = e[static_cast<std::size_t>(k - 1)];
    if (ek == 0) continue;
    const Rational w = a * k * ek;
    for (int i = 1; i < k + s; i += 2) {
      const int j = k + s - i;
      if (j < 1) continue;
      out.add_term(with(e, {{k, -1}, {i, 1}, {j, 1}}), c, w);
    }
  }
  // join: q_i q_j -> q_{i+j+s}
  for (int i = 1; i <= top; i += 2) {
    const int ei = e[static_cast<std::size_t>(i - 1)];
    if (ei == 0) continue;
    for (int j = 1; j <= top; j += 2) {
      const int ej = e[static_cast<std::size_t>(j - 1)];
      if (ej == 0) continue;
      Rational w;
      if (i == j) {
        if (ei < 2) continue;
        w = b * i * i * ei * (ei - 1);
      } else {
        w = b * i * ei * j * ej;
      }
      out.add_term(with(e, {{i, -1}, {j, -1}, {i + j + s, 1}}), c, w);
    }
  }
}

}  // namespace

QPolynomial apply_cut_and_join(const ModelSpec& model, const QPolynomial& p) {
  QPolynomial out(p.cutoff());
  if (model.kind == ModelSpec::Kind::kw) {
    for (const auto& [m, c] : p.terms()) cut_and_join_terms(ratio(1, 3), 3, ratio(1, 6), m, c, out);
    out += p.multiply(QPolynomial::from_monomial(Monomial::variable(1, 3), ratio(1, 6), p.cutoff()));
    out += p.multiply(QPolynomial::from_monomial(Monomial::variable(3), ratio(1, 24), p.cutoff()));
  } else if (model.kind == ModelSpec::Kind::bgw) {
    for (const auto& [m, c] : p.terms()) cut_and_join_terms(ratio(1, 2), 1, ratio(1, 4), m, c, out);
    const ParamPoly shift = ParamPoly(ratio(1, 16)) - ParamPoly::N() * ParamPoly::N() * ratio(1, 4);
    out += p.multiply(QPolynomial::from_monomial(Monomial::variable(1), shift, p.cutoff()));
  } else {
    throw DomainError("no cut-and-join operator for model " + model.to_string());
  }
  return out;
}

TauSeries cut_and_join_exp(const ModelSpec& model, int degree) {
  if (degree < 0) throw DomainError("degree must be non-negative");
  if (model.kind == ModelSpec::Kind::gkm) {
    throw DomainError("no cut-and-join operator for model " + model.to_string());
  }
  const int step = model.kind == ModelSpec::Kind::kw ? 3 : 1;
  const int cutoff = cutoff_for(degree);
  QPolynomial term = QPolynomial::one(cutoff);
  QPolynomial total = term;
  for (int k = 1; k * step <= degree; ++k) {
    term = apply_cut_and_join(model, term);
    term *= ParamPoly(ratio(1, k));
    total += term;
  }
  TauSeries t = from_total(total, degree);
  return t;
}

TauSeries tau_model(const ModelSpec& model, Engine engine, int degree, const Bindings& bindings) {
  if (degree < 0) throw DomainError("degree must be non-negative");
  const bool node_model = model.kind != ModelSpec::Kind::gkm;
  if (!node_model && engine != Engine::fermionic) {
    throw DomainError("engine " + wtau::to_string(engine) + " is not available for model " +
                      model.to_string());
  }
  TauSeries t;
  switch (engine) {
    case Engine::nodes:
      t = oe_solve(build_w_operator(model).substitute(bindings), degree);
      break;
    case Engine::cutjoin:
      t = cut_and_join_exp(model, degree);
      for (auto& [d, c] : t.components) c = c.substitute(bindings);
      break;
    case Engine::fermionic: {
      auto comps = fermionic_components(model);
      for (auto& [k, a] : comps) a = a.substitute(bindings);
      t = oe_solve_fermionic(comps, degree);
      break;
    }
  }
  t.model = model;
  t.engine = engine;
  t.bindings = bindings;
  return t;
}

QPolynomial oe_residual(const GradedOperator& w, const TauSeries& tau) {
  const QPolynomial total = tau.total();
  QPolynomial r = apply_node(NodeOp::L(0), total);
  r -= apply_graded(w, total, tau.degree);
  return r.truncated(tau.degree);
}

std::string DiffReport::to_string() const {
  if (identical) return "identical";
  std::string s = "first difference at grade " + std::to_string(first_grade);
  for (const auto& d : differences) s += "\n  " + d;
  return s;
}

DiffReport series_compare(const TauSeries& a, const TauSeries& b) {
  DiffReport r;
  const int top = std::max(a.degree, b.degree);
  const QPolynomial empty(1);
  for (int d = 0; d <= top; ++d) {
    auto ia = a.components.find(d);
    auto ib = b.components.find(d);
    const QPolynomial& pa = ia == a.components.end() ? empty : ia->second;
    const QPolynomial& pb = ib == b.components.end() ? empty : ib->second;
    if (pa == pb) continue;
    if (r.identical) {
      r.identical = false;
      r.first_grade = d;
    }
    const QPolynomial diff = pa - pb;
    for (const auto& [m, c] : diff.terms()) {
      r.differences.push_back("grade " + std::to_string(d) + " " + m.to_string() + ": " +
                              pa.coefficient(m).to_string() + " vs " +
                              pb.coefficient(m).to_string());
    }
  }
  return r;
}

}  // namespace wtau
