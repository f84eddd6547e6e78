#pragma once

#include <string>
#include <vector>

#include "wtau/tau.hpp"

namespace wtau {

struct ConstraintReport {
  std::string id;
  int max_grade = 0;
  QPolynomial residual{1};
  bool pass = false;
  /// Recorded quantities (reduction constants, Miwa sign, ...).
  std::string note;
};

/// kw: (L_{2m} - (2m+3) d/dq_{2m+3} + delta_{m,0}/8) tau, m >= -1, checked on output
/// grades <= D - 2m - 3.
/// bgw: (L_{2m}/2 + delta_{m,0}(1/16 - N^2/4) - (2m+1) d/dq_{2m+1}) tau at h = 1,
/// m >= 0, checked on output grades <= D - 2m - 1.
/// Throws DomainError if the window is empty or m is out of range for the model.
std::vector<ConstraintReport> check_virasoro(const TauSeries& tau, int m_min, int m_max);

/// Verifies the Hirota time convention t_k = q_k / k: exp(q1) and every Schur
/// function up to grade 5 must satisfy the KP equation, and the naive choice
/// t_k = q_k must fail on at least one of them. Throws ConfigurationError otherwise.
void hirota_self_check();

/// Residual of the first KP Hirota equation
/// tau tau_1111 - 4 tau_1 tau_111 + 3 tau_11^2 + 3 (tau tau_22 - tau_2^2) - 4 (tau tau_13 - tau_1 tau_3)
/// in t-derivatives, through output grade max_grade - 4.
QPolynomial hirota_kp_residual(const QPolynomial& tau, int max_grade, bool naive_times = false);

/// Runs hirota_self_check first.
ConstraintReport check_hirota_kp(const TauSeries& tau, int max_grade);

/// d tau / dq_{rk} = c_k tau for every rk <= D, with c_k read off the grade-rk
/// component. With expect_zero the constants must vanish.
ConstraintReport check_reduction(const TauSeries& tau, int r, bool expect_zero);

/// The identities between odd-reduced nodes used to pass from the W-constraints
/// to the cut-and-join operators, checked on all odd monomials of grade <= max_grade.
std::vector<ConstraintReport> check_odd_node_identities(int max_grade);

}  // namespace wtau
