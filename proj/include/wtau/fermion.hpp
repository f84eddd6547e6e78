#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wtau/diffop.hpp"
#include "wtau/node_ops.hpp"
#include "wtau/partition.hpp"
#include "wtau/qpoly.hpp"

namespace wtau {

/// Charge-zero fermionic Fock state in the partition basis.
class FermionState {
 public:
  using TermMap = std::map<Partition, ParamPoly>;

  FermionState() = default;
  static FermionState vacuum();
  static FermionState basis(const Partition& lambda, const ParamPoly& c = 1);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  ParamPoly coefficient(const Partition& lambda) const;

  void add_term(const Partition& lambda, const ParamPoly& c);
  FermionState& operator+=(const FermionState& other);
  FermionState& operator-=(const FermionState& other);
  FermionState& operator*=(const ParamPoly& c);
  friend FermionState operator+(FermionState a, const FermionState& b) { return a += b; }
  friend FermionState operator-(FermionState a, const FermionState& b) { return a -= b; }
  bool operator==(const FermionState& other) const = default;

  FermionState substitute(const Bindings& bindings) const;
  /// "c*[2,1] + c'*[3]"; "0" for the zero state.
  std::string to_string() const;

 private:
  TermMap terms_;
};

/// Free conventions of the wedge action. A particle at Maya position x moving
/// s steps under z^{-s} D^m gets weight (sigma * (x + offset))^m, times
/// overall_sign, times (-1)^s if grade_sign, times the fermionic sign. With
/// transpose the action is conjugated by lambda -> lambda'.
struct WedgeConvention {
  int overall_sign = 1;
  int weight_sign = 1;
  Rational offset = 0;
  bool grade_sign = false;
  bool transpose = false;

  std::string to_string() const;
  bool operator==(const WedgeConvention&) const = default;
};

struct CalibrationReport {
  WedgeConvention convention;
  int candidates_tried = 0;
  /// All conventions passing every check; more than one means the checks
  /// could not separate them and the first was chosen.
  std::vector<WedgeConvention> passing;
  int identities_checked = 0;
  int max_grade = 0;
};

/// One-body symbol of a node operator as an element of D-:
/// alpha_n ~ -z^n, L_n ~ -z^{n+1} d - (n+1)/2 z^n, and the spin-3 and spin-4
/// analogues. Odd reduction is ignored.
DiffOp node_symbol(const NodeOp& op);

/// Multiplication by p_k in the Schur basis, by adding border strips of size k
/// (Murnaghan-Nakayama). Convention independent.
FermionState add_border_strips(const FermionState& s, int k);

/// Schur function s_lambda in power sums p_k = q_k, by Jacobi-Trudi.
QPolynomial schur_polynomial(const Partition& lambda, int cutoff);

/// |lambda> -> s_lambda, extended linearly. Throws CutoffError if a grade exceeds the cutoff.
QPolynomial fermion_to_boson(const FermionState& s, int cutoff);
/// Inverse of fermion_to_boson.
FermionState boson_to_fermion(const QPolynomial& p);

class FermionEngine {
 public:
  FermionEngine() = default;
  explicit FermionEngine(const WedgeConvention& convention) : convention_(convention) {}

  /// Searches the convention space for the unique choice making the wedge action
  /// reproduce q_k multiplication and the alpha/L/M/Q node actions for n = -6..-1
  /// on monomials up to max_grade. Throws ConfigurationError naming the first
  /// failing identity of the best candidate if none passes.
  CalibrationReport calibrate(int max_grade = 6);

  bool calibrated() const { return convention_.has_value(); }
  const WedgeConvention& convention() const;

  /// W_a on a fermionic state. Rejects a outside D- and use before calibration.
  FermionState onebody_apply(const DiffOp& a, const FermionState& s) const;
  /// W_a on a bosonic state via the fermionic picture.
  QPolynomial apply_bosonic(const DiffOp& a, const QPolynomial& p) const;

  /// Process-wide engine, calibrated on first use.
  static const FermionEngine& shared();

 private:
  std::optional<WedgeConvention> convention_;
};

/// Wedge action under an explicit convention, without calibration checks.
FermionState wedge_apply(const WedgeConvention& convention, const DiffOp& a,
                         const FermionState& s);

}  // namespace wtau
