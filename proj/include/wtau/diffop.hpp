#pragma once

#include <compare>
#include <map>
#include <string>

#include "wtau/param_poly.hpp"

namespace wtau {

/// Key of the normal-ordered monomial z^z_power D^d_power, D = z d/dz.
struct DiffKey {
  int z_power = 0;
  int d_power = 0;
  auto operator<=>(const DiffKey&) const = default;
};

/// Laurent polynomial in z, power -> coefficient. Zero coefficients are not stored.
using Laurent = std::map<int, ParamPoly>;

/// Element of the algebra of differential operators on the circle, in the
/// normal form sum c_{n,m} z^n D^m (every D to the right of every z).
class DiffOp {
 public:
  using TermMap = std::map<DiffKey, ParamPoly>;

  DiffOp() = default;

  static DiffOp monomial(int z_power, int d_power, const ParamPoly& c = 1);
  static DiffOp constant(const ParamPoly& c) { return monomial(0, 0, c); }
  static DiffOp z(int power = 1) { return monomial(power, 0); }
  static DiffOp D() { return monomial(0, 1); }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  ParamPoly coefficient(int z_power, int d_power) const;

  DiffOp& operator+=(const DiffOp& other);
  DiffOp& operator-=(const DiffOp& other);
  DiffOp& operator*=(const ParamPoly& c);
  friend DiffOp operator+(DiffOp a, const DiffOp& b) { return a += b; }
  friend DiffOp operator-(DiffOp a, const DiffOp& b) { return a -= b; }
  friend DiffOp operator*(DiffOp a, const ParamPoly& c) { return a *= c; }
  friend DiffOp operator*(const ParamPoly& c, DiffOp a) { return a *= c; }
  DiffOp operator-() const;
  /// Normal-form product, reduced with D z^n = z^n (D + n).
  friend DiffOp operator*(const DiffOp& a, const DiffOp& b);
  bool operator==(const DiffOp& other) const = default;

  /// Adjoint with respect to the residue pairing: (z^n D^k)* = z^{-1} (-D)^k z^{n+1}.
  DiffOp adjoint() const;

  /// True when every z-power is <= -1 (the positive-energy subalgebra D-).
  bool in_d_minus() const;
  /// Components keyed by grade s = -z_power.
  std::map<int, DiffOp> grade_components() const;
  int max_d_power() const;

  DiffOp substitute(const Bindings& bindings) const;

  /// Action on a Laurent polynomial: z^n D^m z^k = k^m z^{n+k}.
  Laurent apply(const Laurent& f) const;

  /// Canonical rendering, z-powers descending and D-powers descending within,
  /// e.g. "-3/2*z^-3*D^2 + 3*z^-3*D - 5/8*z^-3".
  std::string to_string() const;

 private:
  void add_term(const DiffKey& k, const ParamPoly& c);

  TermMap terms_;
};

DiffOp power(const DiffOp& a, int exponent);

/// z^n (d/dz)^k rewritten in D-form: z^{n-k} D (D-1) ... (D-k+1).
DiffOp to_D_form(int n, int k);

/// Coefficient of z^{-1}.
ParamPoly residue(const Laurent& f);
Laurent multiply(const Laurent& a, const Laurent& b);

}  // namespace wtau
