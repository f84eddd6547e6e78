#include "wtau/rational.hpp"

#include <cctype>

#include "wtau/error.hpp"

namespace wtau {

Rational rational_normalize(const Integer& p, const Integer& q) {
  if (q == 0) throw DivisionByZero();
  Rational r(p, q);  // NOLINT
  r.canonicalize();
  return r;
}

Rational ratio(long p, long q) { return rational_normalize(Integer(p), Integer(q)); }

std::string to_string(const Rational& r) { return r.get_str(); }

Rational parse_rational(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty()) throw ParseError("empty rational");
  auto valid_int = [](std::string_view t) {
    if (!t.empty() && (t.front() == '-' || t.front() == '+')) t.remove_prefix(1);
    if (t.empty()) return false;
    for (char c : t) {
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!num.empty() && num.front() == '+') num.erase(0, 1);
  if (!valid_int(num) || !valid_int(den) || den.front() == '-' || den.front() == '+') {
    throw ParseError("malformed rational: '" + std::string(text) + "'");
  }
  return rational_normalize(Integer(num), Integer(den));
}

Rational binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(r);
}

Rational factorial(int n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(r);
}

Rational power(const Rational& base, int exponent) {
  Rational r = 1;
  if (exponent < 0) {
    if (base == 0) throw DivisionByZero();
    return 1 / power(base, -exponent);
  }
  for (int i = 0; i < exponent; ++i) r *= base;
  return r;
}

}  // namespace wtau
