#pragma once

#include <map>
#include <string>
#include <vector>

#include "wtau/param_poly.hpp"

namespace wtau {

/// Monomial prod q_k^{e_k}. Exponents are stored densely from q1 with
/// trailing zeros trimmed, so equal monomials compare equal.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<int> exponents);
  /// q_k^e
  static Monomial variable(int k, int e = 1);

  int exponent(int k) const {
    return k >= 1 && k <= static_cast<int>(exps_.size()) ? exps_[k - 1] : 0;
  }
  const std::vector<int>& exponents() const { return exps_; }
  /// Largest k with a nonzero exponent, 0 for the constant monomial.
  int max_variable() const { return static_cast<int>(exps_.size()); }
  /// sum k * e_k
  int grade() const { return grade_; }
  /// sum e_k
  int degree() const;
  bool is_one() const { return exps_.empty(); }
  bool has_even_variable() const;

  Monomial times(const Monomial& other) const;

  /// Order: grade ascending, then exponent vectors lexicographically descending.
  bool operator<(const Monomial& other) const;
  bool operator==(const Monomial& other) const { return exps_ == other.exps_; }

  /// "q1^3*q3", or "1" for the empty monomial.
  std::string to_string() const;
  static Monomial parse(const std::string& text);

 private:
  std::vector<int> exps_;
  int grade_ = 0;
};

/// Bosonic Fock state: sparse polynomial in q_1..q_K with ParamPoly coefficients.
/// The cutoff K is explicit; producing q_k with k > K throws CutoffError.
class QPolynomial {
 public:
  using TermMap = std::map<Monomial, ParamPoly>;

  explicit QPolynomial(int cutoff);

  static QPolynomial one(int cutoff);
  static QPolynomial from_monomial(const Monomial& m, const ParamPoly& c, int cutoff);

  int cutoff() const { return cutoff_; }
  QPolynomial with_cutoff(int cutoff) const;

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  ParamPoly coefficient(const Monomial& m) const;

  /// Adds c * m, dropping cancellations. Throws CutoffError if m needs q_k with k > K.
  void add_term(const Monomial& m, const ParamPoly& c);
  void add_term(const Monomial& m, const ParamPoly& c, const Rational& scale);

  QPolynomial& operator+=(const QPolynomial& other);
  QPolynomial& operator-=(const QPolynomial& other);
  QPolynomial& operator*=(const ParamPoly& c);
  friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }
  friend QPolynomial operator-(QPolynomial a, const QPolynomial& b) { return a -= b; }
  friend QPolynomial operator*(QPolynomial a, const ParamPoly& c) { return a *= c; }
  friend QPolynomial operator*(const ParamPoly& c, QPolynomial a) { return a *= c; }
  /// Product keeping only output grades <= max_grade (negative means unbounded).
  QPolynomial multiply(const QPolynomial& other, int max_grade = -1) const;

  /// Equality of the polynomials; cutoffs are ignored.
  bool operator==(const QPolynomial& other) const { return terms_ == other.terms_; }

  /// d/dq_k
  QPolynomial derivative(int k) const;
  /// q_k * this
  QPolynomial times_variable(int k) const;

  std::map<int, QPolynomial> grade_decompose() const;
  QPolynomial homogeneous_part(int grade) const;
  QPolynomial truncated(int max_grade) const;
  int max_grade() const;
  int min_grade() const;

  /// Drops every monomial that contains an even variable.
  QPolynomial odd_part() const;
  bool depends_on_even_variables() const;

  QPolynomial substitute(const Bindings& bindings) const;

  /// Canonical rendering, e.g. "1/6*q1^3 + 1/24*q3".
  std::string to_string() const;

 private:
  void check_cutoff(const Monomial& m) const;

  TermMap terms_;
  int cutoff_;
};

}  // namespace wtau
