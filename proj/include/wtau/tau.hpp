#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "wtau/graded_operator.hpp"
#include "wtau/model_ops.hpp"
#include "wtau/qpoly.hpp"

namespace wtau {

enum class Engine { nodes, fermionic, cutjoin };

std::string to_string(Engine e);
Engine parse_engine(std::string_view text);

/// Tau-function truncated at grade `degree`. components[d] is the homogeneous
/// grade-d part for every d in 0..degree (possibly zero); grade d carries h^d.
struct TauSeries {
  ModelSpec model;
  Engine engine = Engine::nodes;
  int degree = 0;
  Bindings bindings;
  std::map<int, QPolynomial> components;

  const QPolynomial& component(int d) const;
  QPolynomial total() const;
  /// Sum of h^d * component_d.
  QPolynomial with_hbar() const;
};

/// d tau_d = sum_k W^[k] tau_{d-k}, tau_0 = 1. The returned series has only
/// degree and components filled in.
TauSeries oe_solve(const GradedOperator& w, int degree);

/// Grade components of the model's D- operator with the h-scaling removed
/// (grade k carries exactly h^k; anything else is an internal inconsistency).
std::map<int, DiffOp> fermionic_components(const ModelSpec& model);

/// Same recursion run entirely in the partition basis, bosonized at the end.
TauSeries oe_solve_fermionic(const std::map<int, DiffOp>& components, int degree);

/// The cut-and-join operator of kw (grade 3) or bgw (grade 1) applied to P.
QPolynomial apply_cut_and_join(const ModelSpec& model, const QPolynomial& p);

/// exp(W)·1 as sum W^k·1/k!, truncated at grade `degree`.
TauSeries cut_and_join_exp(const ModelSpec& model, int degree);

/// Dispatches to an engine. nodes and cutjoin accept kw and bgw only.
/// Bindings are substituted into the operator before solving.
TauSeries tau_model(const ModelSpec& model, Engine engine, int degree,
                    const Bindings& bindings = {});

/// (L0 - W) tau through grade tau.degree, evaluated independently of the solver.
QPolynomial oe_residual(const GradedOperator& w, const TauSeries& tau);

struct DiffReport {
  bool identical = true;
  int first_grade = -1;
  std::vector<std::string> differences;
  std::string to_string() const;
};

DiffReport series_compare(const TauSeries& a, const TauSeries& b);

}  // namespace wtau
