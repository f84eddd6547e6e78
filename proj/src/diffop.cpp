#include "wtau/diffop.hpp"

#include <sstream>

namespace wtau {

DiffOp DiffOp::monomial(int z_power, int d_power, const ParamPoly& c) {
  DiffOp r;
  r.add_term({z_power, d_power}, c);
  return r;
}

ParamPoly DiffOp::coefficient(int z_power, int d_power) const {
  auto it = terms_.find({z_power, d_power});
  return it == terms_.end() ? ParamPoly() : it->second;
}

void DiffOp::add_term(const DiffKey& k, const ParamPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

DiffOp& DiffOp::operator+=(const DiffOp& other) {
  for (const auto& [k, c] : other.terms_) add_term(k, c);
  return *this;
}

DiffOp& DiffOp::operator-=(const DiffOp& other) {
  for (const auto& [k, c] : other.terms_) add_term(k, -c);
  return *this;
}

DiffOp& DiffOp::operator*=(const ParamPoly& c) {
  TermMap out;
  for (const auto& [k, v] : terms_) {
    ParamPoly p = v * c;
    if (!p.is_zero()) out.emplace(k, std::move(p));
  }
  terms_ = std::move(out);
  return *this;
}

DiffOp DiffOp::operator-() const {
  DiffOp r;
  for (const auto& [k, v] : terms_) r.terms_.emplace(k, -v);
  return r;
}

DiffOp operator*(const DiffOp& a, const DiffOp& b) {
  DiffOp r;
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      // z^a D^p z^c D^q = z^{a+c} (D + c)^p D^q
      ParamPoly cc = ca * cb;
      for (int i = 0; i <= ka.d_power; ++i) {
        Rational w = binomial(ka.d_power, i) * power(Rational(kb.z_power), ka.d_power - i);
        if (w == 0) continue;
        r.add_term({ka.z_power + kb.z_power, i + kb.d_power}, cc * w);
      }
    }
  }
  return r;
}

DiffOp DiffOp::adjoint() const {
  DiffOp r;
  for (const auto& [k, c] : terms_) {
    // z^{-1} (-D)^m z^{n+1} = z^n (-(D + n + 1))^m
    const int n = k.z_power;
    const int m = k.d_power;
    const Rational sign = m % 2 == 0 ? 1 : -1;
    for (int i = 0; i <= m; ++i) {
      Rational w = sign * binomial(m, i) * power(Rational(n + 1), m - i);
      if (w == 0) continue;
      r.add_term({n, i}, c * w);
    }
  }
  return r;
}

bool DiffOp::in_d_minus() const {
  for (const auto& [k, c] : terms_) {
    if (k.z_power > -1) return false;
  }
  return true;
}

std::map<int, DiffOp> DiffOp::grade_components() const {
  std::map<int, DiffOp> out;
  for (const auto& [k, c] : terms_) out[-k.z_power].add_term(k, c);
  return out;
}

int DiffOp::max_d_power() const {
  int m = 0;
  for (const auto& [k, c] : terms_) m = std::max(m, k.d_power);
  return m;
}

DiffOp DiffOp::substitute(const Bindings& bindings) const {
  DiffOp r;
  for (const auto& [k, c] : terms_) r.add_term(k, c.substitute(bindings));
  return r;
}

Laurent DiffOp::apply(const Laurent& f) const {
  Laurent out;
  for (const auto& [k, c] : terms_) {
    for (const auto& [p, v] : f) {
      Rational w = power(Rational(p), k.d_power);
      if (w == 0) continue;
      ParamPoly t = c * v;
      t *= w;
      auto& slot = out[k.z_power + p];
      slot += t;
      if (slot.is_zero()) out.erase(k.z_power + p);
    }
  }
  return out;
}

std::string DiffOp::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [k, c] = *it;
    std::string vars;
    if (k.z_power != 0) {
      vars = "z";
      if (k.z_power != 1) vars += "^" + std::to_string(k.z_power);
    }
    if (k.d_power != 0) {
      if (!vars.empty()) vars += "*";
      vars += "D";
      if (k.d_power != 1) vars += "^" + std::to_string(k.d_power);
    }
    std::string coeff;
    bool negative = false;
    if (c.terms().size() == 1 && c.is_constant()) {
      Rational v = c.constant_term();
      negative = v < 0;
      Rational mag = abs(v);
      if (mag != 1 || vars.empty()) coeff = mag.get_str();
    } else if (c.terms().size() == 1) {
      std::string s = c.to_string();
      negative = s.front() == '-';
      coeff = negative ? s.substr(1) : s;
    } else {
      coeff = "(" + c.to_string() + ")";
    }
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    os << coeff;
    if (!coeff.empty() && !vars.empty()) os << "*";
    os << vars;
  }
  return os.str();
}

DiffOp power(const DiffOp& a, int exponent) {
  DiffOp r = DiffOp::constant(1);
  for (int i = 0; i < exponent; ++i) r = r * a;
  return r;
}

DiffOp to_D_form(int n, int k) {
  DiffOp r = DiffOp::z(n - k);
  for (int j = 0; j < k; ++j) r = r * (DiffOp::D() - DiffOp::constant(j));
  return r;
}

ParamPoly residue(const Laurent& f) {
  auto it = f.find(-1);
  return it == f.end() ? ParamPoly() : it->second;
}

Laurent multiply(const Laurent& a, const Laurent& b) {
  Laurent out;
  for (const auto& [pa, ca] : a) {
    for (const auto& [pb, cb] : b) {
      auto& slot = out[pa + pb];
      slot += ca * cb;
      if (slot.is_zero()) out.erase(pa + pb);
    }
  }
  return out;
}

}  // namespace wtau
