#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "wtau/diffop.hpp"
#include "wtau/model_ops.hpp"
#include "wtau/node_ops.hpp"
#include "wtau/qpoly.hpp"

namespace wtau {

struct NodeTerm {
  ParamPoly coefficient;
  NodeOp op;
};
using NodeCombination = std::vector<NodeTerm>;

/// Grade-raising Fock operator stored per grade k >= 1. A component is either a
/// combination of node operators or a homogeneous element of D- (acting through
/// the fermionic engine).
class GradedOperator {
 public:
  using Component = std::variant<NodeCombination, DiffOp>;

  /// Every node must raise grade by exactly k.
  void set_nodes(int k, NodeCombination nodes);
  /// symbol must be homogeneous with all z-powers equal to -k.
  void set_generic(int k, DiffOp symbol);

  const std::map<int, Component>& components() const { return components_; }
  bool empty() const { return components_.empty(); }

  GradedOperator substitute(const Bindings& bindings) const;
  std::string to_string() const;

 private:
  std::map<int, Component> components_;
};

/// Applies one component to P.
QPolynomial apply_component(const GradedOperator::Component& c, const QPolynomial& p);

/// Sum of all components on P, keeping output grades <= grade_cap.
QPolynomial apply_graded(const GradedOperator& w, const QPolynomial& p, int grade_cap);

/// Constraint operator of a model: node form for kw and bgw, the grade
/// components of R_n for gkm(n).
GradedOperator build_w_operator(const ModelSpec& model);

/// Grade components of a D- operator, each tagged generic.
GradedOperator generic_operator(const DiffOp& b);

std::map<int, QPolynomial> grade_decompose(const QPolynomial& p);

}  // namespace wtau
