#include "wtau/param_poly.hpp"

#include <cctype>
#include <sstream>

#include "wtau/error.hpp"

namespace wtau {

ParamPoly::ParamPoly(const Rational& c) {
  if (c != 0) terms_.emplace(ParamExponent{}, c);
}

ParamPoly ParamPoly::monomial(const Rational& c, int n_exp, int hbar_exp) {
  ParamPoly p;
  if (c != 0) p.terms_.emplace(ParamExponent{n_exp, hbar_exp}, c);
  return p;
}

bool ParamPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == ParamExponent{});
}

Rational ParamPoly::constant_term() const { return coefficient({}); }

Rational ParamPoly::coefficient(ParamExponent e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

int ParamPoly::max_exponent_n() const {
  int m = 0;
  for (const auto& [e, c] : terms_) m = std::max(m, e.n);
  return m;
}

int ParamPoly::max_exponent_hbar() const {
  int m = 0;
  for (const auto& [e, c] : terms_) m = std::max(m, e.hbar);
  return m;
}

bool ParamPoly::even_in_n() const {
  for (const auto& [e, c] : terms_) {
    if (e.n % 2 != 0) return false;
  }
  return true;
}

void ParamPoly::add_term(const ParamExponent& e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

void ParamPoly::add_scaled(const ParamPoly& a, const Rational& c) {
  if (c == 0) return;
  for (const auto& [e, v] : a.terms_) add_term(e, v * c);
}

ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
  ParamPoly r;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      r.add_term({ea.n + eb.n, ea.hbar + eb.hbar}, ca * cb);
    }
  }
  return r;
}

ParamPoly& ParamPoly::operator*=(const ParamPoly& other) { return *this = *this * other; }

ParamPoly& ParamPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

ParamPoly ParamPoly::operator-() const {
  ParamPoly r = *this;
  for (auto& [e, v] : r.terms_) v = -v;
  return r;
}

ParamPoly ParamPoly::substitute(const Bindings& bindings) const {
  if (bindings.empty()) return *this;
  ParamPoly r;
  for (const auto& [e, c] : terms_) {
    ParamExponent ne = e;
    Rational v = c;
    if (bindings.n) {
      v *= power(*bindings.n, e.n);
      ne.n = 0;
    }
    if (bindings.hbar) {
      v *= power(*bindings.hbar, e.hbar);
      ne.hbar = 0;
    }
    r.add_term(ne, v);
  }
  return r;
}

namespace {

std::string factor_string(const char* name, int exp) {
  if (exp == 0) return {};
  std::string s = name;
  if (exp != 1) s += "^" + std::to_string(exp);
  return s;
}

}  // namespace

std::string ParamPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    std::string vars = factor_string("N", e.n);
    std::string h = factor_string("h", e.hbar);
    if (!vars.empty() && !h.empty()) vars += "*";
    vars += h;
    if (vars.empty()) {
      os << mag.get_str();
    } else if (mag == 1) {
      os << vars;
    } else {
      os << mag.get_str() << "*" << vars;
    }
  }
  return os.str();
}

ParamPoly ParamPoly::parse(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty()) throw ParseError("empty parameter polynomial");
  ParamPoly result;
  std::size_t pos = 0;
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    }
    std::size_t end = pos;
    while (end < s.size() && s[end] != '+' && s[end] != '-') ++end;
    std::string term = s.substr(pos, end - pos);
    if (term.empty()) throw ParseError("malformed parameter polynomial: '" + s + "'");
    Rational coeff = sign;
    ParamExponent e;
    std::size_t fpos = 0;
    while (fpos <= term.size()) {
      std::size_t star = term.find('*', fpos);
      if (star == std::string::npos) star = term.size();
      std::string factor = term.substr(fpos, star - fpos);
      if (factor.empty()) throw ParseError("empty factor in '" + term + "'");
      std::string base = factor;
      int exp = 1;
      if (auto caret = factor.find('^'); caret != std::string::npos) {
        base = factor.substr(0, caret);
        const std::string digits = factor.substr(caret + 1);
        std::size_t used = 0;
        try {
          exp = std::stoi(digits, &used);
        } catch (const std::exception&) {
          used = 0;
        }
        if (digits.empty() || used != digits.size()) {
          throw ParseError("malformed exponent in '" + factor + "'");
        }
        if (exp < 0) throw ParseError("negative exponent in '" + factor + "'");
      }
      if (base == "N") {
        e.n += exp;
      } else if (base == "h" || base == "hbar") {
        e.hbar += exp;
      } else {
        if (exp != 1) throw ParseError("exponent on numeric factor '" + factor + "'");
        coeff *= parse_rational(base);
      }
      fpos = star + 1;
    }
    result.add_term(e, coeff);
    pos = end;
  }
  return result;
}

}  // namespace wtau
