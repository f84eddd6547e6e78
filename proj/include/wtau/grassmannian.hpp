#pragma once

#include <map>
#include <vector>

#include "wtau/diffop.hpp"
#include "wtau/tau.hpp"
#include "wtau/verify.hpp"

namespace wtau {

/// Phi_j = z^{j-1} + sum_{i >= 1} phi_{j,i} z^{-i}, stored through z^{-order}.
/// The echelon gauge removes every power z^0..z^{j-2}.
struct BasisVector {
  int index = 1;
  int order = 0;
  /// power -> coefficient, including the leading z^{j-1} with coefficient 1.
  Laurent coefficients;
  /// c_i in (D + b) Phi_j = (j-1) Phi_j + sum_{i>=2} c_i Phi_{j-i+1}.
  std::map<int, ParamPoly> c;

  int leading_power() const { return index - 1; }
  /// phi_{j,i}, the coefficient of z^{-i}.
  ParamPoly phi(int i) const;
};

/// First `count` basis vectors of the point of the Grassmannian stabilized by
/// D + b, to order z^{-order}. b must be in D-.
std::vector<BasisVector> grassmannian_basis(const DiffOp& b, int count, int order);

/// Re-checks the defining relation of every vector by applying D + b, exactly
/// through z^{-order}.
ConstraintReport verify_basis(const DiffOp& b, const std::vector<BasisVector>& basis);

/// Compares tau(q_k = sigma x^k) with Phi_1 (x = 1/z) through x^order, and with
/// two basis vectors tau(q_k = sigma(x^k + y^k)) with det(Phi_a(z_b)) / (z_2 - z_1).
/// sigma = +1 is tried first, then -1; the sign that works is recorded in the note.
ConstraintReport miwa_crosscheck(const TauSeries& tau, const std::vector<BasisVector>& basis,
                                 int order);

/// res_z(A_i B_j) = 0 for all pairs whose residue is determined by the truncations.
ConstraintReport check_orthogonality(const std::vector<BasisVector>& a,
                                     const std::vector<BasisVector>& b);

}  // namespace wtau
