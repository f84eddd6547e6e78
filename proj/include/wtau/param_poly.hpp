#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "wtau/rational.hpp"

namespace wtau {

/// Exponents of N and hbar in a ParamPoly monomial.
struct ParamExponent {
  int n = 0;
  int hbar = 0;
  auto operator<=>(const ParamExponent&) const = default;
};

/// Rational values bound to the formal parameters. Unbound parameters stay symbolic.
struct Bindings {
  std::optional<Rational> n;
  std::optional<Rational> hbar;

  bool empty() const { return !n && !hbar; }
};

/// Exact polynomial in the formal parameters N and hbar over the rationals.
/// Zero coefficients are never stored.
class ParamPoly {
 public:
  using TermMap = std::map<ParamExponent, Rational>;

  ParamPoly() = default;
  ParamPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
  ParamPoly(long c) : ParamPoly(Rational(c)) {}  // NOLINT
  ParamPoly(int c) : ParamPoly(Rational(c)) {}   // NOLINT

  static ParamPoly monomial(const Rational& c, int n_exp, int hbar_exp);
  static ParamPoly N() { return monomial(1, 1, 0); }
  static ParamPoly hbar() { return monomial(1, 0, 1); }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Coefficient of N^0 hbar^0.
  Rational constant_term() const;
  Rational coefficient(ParamExponent e) const;

  int max_exponent_n() const;
  int max_exponent_hbar() const;
  /// True when every stored term has an even power of N.
  bool even_in_n() const;

  ParamPoly& operator+=(const ParamPoly& other);
  ParamPoly& operator-=(const ParamPoly& other);
  ParamPoly& operator*=(const ParamPoly& other);
  ParamPoly& operator*=(const Rational& c);
  /// this += a * c, without building the temporary product.
  void add_scaled(const ParamPoly& a, const Rational& c);

  friend ParamPoly operator+(ParamPoly a, const ParamPoly& b) { return a += b; }
  friend ParamPoly operator-(ParamPoly a, const ParamPoly& b) { return a -= b; }
  friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b);
  friend ParamPoly operator*(ParamPoly a, const Rational& c) { return a *= c; }
  friend ParamPoly operator*(const Rational& c, ParamPoly a) { return a *= c; }
  ParamPoly operator-() const;
  bool operator==(const ParamPoly& other) const = default;

  ParamPoly substitute(const Bindings& bindings) const;

  /// Canonical rendering, e.g. "1/4 - 1/4*N^2". hbar renders as "h".
  std::string to_string() const;
  /// Inverse of to_string(); also accepts "hbar" for h and arbitrary term order.
  static ParamPoly parse(std::string_view text);

 private:
  void add_term(const ParamExponent& e, const Rational& c);

  TermMap terms_;
};

}  // namespace wtau
