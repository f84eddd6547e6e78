#include "wtau/graded_operator.hpp"

#include "wtau/error.hpp"
#include "wtau/fermion.hpp"

namespace wtau {

void GradedOperator::set_nodes(int k, NodeCombination nodes) {
  if (k < 1) throw DomainError("graded component must raise grade by at least 1");
  for (const auto& t : nodes) {
    if (t.op.grade_shift() != k) {
      throw DomainError("node " + t.op.to_string() + " does not raise grade by " +
                        std::to_string(k));
    }
  }
  components_[k] = std::move(nodes);
}

void GradedOperator::set_generic(int k, DiffOp symbol) {
  if (k < 1) throw DomainError("graded component must raise grade by at least 1");
  for (const auto& [key, c] : symbol.terms()) {
    if (key.z_power != -k) {
      throw DomainError("generic component is not homogeneous of grade " + std::to_string(k) +
                        ": " + symbol.to_string());
    }
  }
  components_[k] = std::move(symbol);
}

GradedOperator GradedOperator::substitute(const Bindings& bindings) const {
  GradedOperator out;
  for (const auto& [k, comp] : components_) {
    if (const auto* nodes = std::get_if<NodeCombination>(&comp)) {
      NodeCombination sub;
      for (const auto& t : *nodes) sub.push_back({t.coefficient.substitute(bindings), t.op});
      out.components_[k] = std::move(sub);
    } else {
      out.components_[k] = std::get<DiffOp>(comp).substitute(bindings);
    }
  }
  return out;
}

std::string GradedOperator::to_string() const {
  std::string s;
  for (const auto& [k, comp] : components_) {
    s += "grade " + std::to_string(k) + ": ";
    if (const auto* nodes = std::get_if<NodeCombination>(&comp)) {
      bool first = true;
      for (const auto& t : *nodes) {
        if (!first) s += " + ";
        first = false;
        s += "(" + t.coefficient.to_string() + ")*" + t.op.to_string();
      }
    } else {
      s += "W[" + std::get<DiffOp>(comp).to_string() + "]";
    }
    s += "\n";
  }
  return s;
}

QPolynomial apply_component(const GradedOperator::Component& c, const QPolynomial& p) {
  if (const auto* nodes = std::get_if<NodeCombination>(&c)) {
    QPolynomial out(p.cutoff());
    for (const auto& t : *nodes) out += apply_node(t.op, p) * t.coefficient;
    return out;
  }
  return FermionEngine::shared().apply_bosonic(std::get<DiffOp>(c), p);
}

QPolynomial apply_graded(const GradedOperator& w, const QPolynomial& p, int grade_cap) {
  QPolynomial out(p.cutoff());
  if (p.is_zero()) return out;
  const auto parts = p.grade_decompose();
  for (const auto& [k, comp] : w.components()) {
    for (const auto& [d, part] : parts) {
      if (grade_cap >= 0 && d + k > grade_cap) continue;
      out += apply_component(comp, part);
    }
  }
  return out;
}

GradedOperator generic_operator(const DiffOp& b) {
  if (!b.in_d_minus()) throw DomainError("operator not in D-: " + b.to_string());
  GradedOperator w;
  for (auto& [k, comp] : b.grade_components()) w.set_generic(k, comp);
  return w;
}

GradedOperator build_w_operator(const ModelSpec& model) {
  GradedOperator w;
  switch (model.kind) {
    case ModelSpec::Kind::kw:
      w.set_nodes(3, {{ratio(3, 2), NodeOp::M(-3)}, {ratio(1, 8), NodeOp::alpha(-3)}});
      w.set_nodes(6, {{ratio(-1, 2), NodeOp::Q(-6)}, {ratio(-21, 40), NodeOp::L(-6)}});
      return w;
    case ModelSpec::Kind::bgw: {
      const ParamPoly shift = ParamPoly(ratio(1, 4)) - ParamPoly::N() * ParamPoly::N();
      w.set_nodes(1, {{ratio(3, 4), NodeOp::M(-1)}, {shift * ratio(1, 4), NodeOp::alpha(-1)}});
      w.set_nodes(2, {{ratio(-1, 8), NodeOp::Q(-2)}, {shift * ratio(-1, 8), NodeOp::L(-2)}});
      return w;
    }
    case ModelSpec::Kind::gkm:
      return generic_operator(build_gkm_ops(model.n).R);
  }
  throw DomainError("unknown model");
}

std::map<int, QPolynomial> grade_decompose(const QPolynomial& p) { return p.grade_decompose(); }

}  // namespace wtau
