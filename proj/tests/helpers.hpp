#pragma once

#include <cstdlib>
#include <random>
#include <string>

#include "wtau/diffop.hpp"
#include "wtau/partition.hpp"
#include "wtau/qpoly.hpp"

namespace wtau::testing {

/// Seed for randomized tests, from WTAU_SEED when set.
inline std::uint64_t test_seed() {
  if (const char* s = std::getenv("WTAU_SEED"); s && *s) return std::stoull(s);
  return 20261015;
}

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(test_seed());
  return gen;
}

inline int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

inline Rational random_rational() {
  Rational r(uniform(-9, 9), uniform(1, 6));
  r.canonicalize();
  return r;
}

inline ParamPoly random_param_poly(int terms = 3) {
  ParamPoly p;
  for (int i = 0; i < terms; ++i) {
    p += ParamPoly::monomial(random_rational(), uniform(0, 2), uniform(0, 2));
  }
  return p;
}

inline DiffOp random_diffop(int terms, int z_lo, int z_hi, int max_d) {
  DiffOp a;
  for (int i = 0; i < terms; ++i) {
    a += DiffOp::monomial(uniform(z_lo, z_hi), uniform(0, max_d), random_rational());
  }
  return a;
}

inline Laurent random_laurent(int lo, int hi, int terms) {
  Laurent f;
  for (int i = 0; i < terms; ++i) {
    ParamPoly& c = f[uniform(lo, hi)];
    c += random_rational();
  }
  for (auto it = f.begin(); it != f.end();) {
    it = it->second.is_zero() ? f.erase(it) : std::next(it);
  }
  return f;
}

inline Monomial monomial_of(const Partition& mu) {
  std::vector<int> e(static_cast<std::size_t>(mu.empty() ? 0 : mu.part(0)), 0);
  for (int p : mu.parts()) ++e[static_cast<std::size_t>(p - 1)];
  return Monomial(e);
}

/// Every monomial of grade <= max_grade, each as its own polynomial.
inline std::vector<QPolynomial> all_monomials(int max_grade, int cutoff, bool odd_only = false) {
  std::vector<QPolynomial> out;
  for (int g = 0; g <= max_grade; ++g) {
    for (const Partition& mu : partitions_of(g)) {
      const Monomial m = monomial_of(mu);
      if (odd_only && m.has_even_variable()) continue;
      out.push_back(QPolynomial::from_monomial(m, 1, cutoff));
    }
  }
  return out;
}

inline QPolynomial q(const std::string& text, int cutoff = 16) {
  return QPolynomial::from_monomial(Monomial::parse(text), 1, cutoff);
}

}  // namespace wtau::testing
