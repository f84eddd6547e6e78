#include "wtau/qpoly.hpp"

#include <algorithm>
#include <sstream>

#include "wtau/error.hpp"

namespace wtau {

Monomial::Monomial(std::vector<int> exponents) : exps_(std::move(exponents)) {
  while (!exps_.empty() && exps_.back() == 0) exps_.pop_back();
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] < 0) throw DomainError("negative exponent in monomial");
    grade_ += static_cast<int>(i + 1) * exps_[i];
  }
}

Monomial Monomial::variable(int k, int e) {
  if (k < 1) throw DomainError("variable index must be >= 1");
  std::vector<int> v(static_cast<std::size_t>(k), 0);
  v[static_cast<std::size_t>(k - 1)] = e;
  return Monomial(std::move(v));
}

int Monomial::degree() const {
  int d = 0;
  for (int e : exps_) d += e;
  return d;
}

bool Monomial::has_even_variable() const {
  for (std::size_t i = 1; i < exps_.size(); i += 2) {
    if (exps_[i] != 0) return true;
  }
  return false;
}

Monomial Monomial::times(const Monomial& other) const {
  std::vector<int> v(std::max(exps_.size(), other.exps_.size()), 0);
  for (std::size_t i = 0; i < exps_.size(); ++i) v[i] += exps_[i];
  for (std::size_t i = 0; i < other.exps_.size(); ++i) v[i] += other.exps_[i];
  return Monomial(std::move(v));
}

bool Monomial::operator<(const Monomial& other) const {
  if (grade_ != other.grade_) return grade_ < other.grade_;
  return std::lexicographical_compare(other.exps_.begin(), other.exps_.end(), exps_.begin(),
                                      exps_.end());
}

std::string Monomial::to_string() const {
  if (exps_.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += "q" + std::to_string(i + 1);
    if (exps_[i] != 1) s += "^" + std::to_string(exps_[i]);
  }
  return s;
}

Monomial Monomial::parse(const std::string& text) {
  if (text == "1" || text.empty()) return Monomial();
  std::vector<int> v;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t star = text.find('*', pos);
    if (star == std::string::npos) star = text.size();
    std::string f = text.substr(pos, star - pos);
    if (f.size() < 2 || f[0] != 'q') throw ParseError("malformed monomial factor '" + f + "'");
    std::size_t caret = f.find('^');
    int k = 0;
    int e = 1;
    try {
      k = std::stoi(f.substr(1, caret == std::string::npos ? std::string::npos : caret - 1));
      if (caret != std::string::npos) e = std::stoi(f.substr(caret + 1));
    } catch (const std::exception&) {
      throw ParseError("malformed monomial factor '" + f + "'");
    }
    if (k < 1 || e < 0) throw ParseError("malformed monomial factor '" + f + "'");
    if (static_cast<int>(v.size()) < k) v.resize(static_cast<std::size_t>(k), 0);
    v[static_cast<std::size_t>(k - 1)] += e;
    pos = star + 1;
  }
  return Monomial(std::move(v));
}

QPolynomial::QPolynomial(int cutoff) : cutoff_(cutoff) {
  if (cutoff < 0) throw DomainError("cutoff must be non-negative");
}

QPolynomial QPolynomial::one(int cutoff) {
  QPolynomial p(cutoff);
  p.add_term(Monomial(), 1);
  return p;
}

QPolynomial QPolynomial::from_monomial(const Monomial& m, const ParamPoly& c, int cutoff) {
  QPolynomial p(cutoff);
  p.add_term(m, c);
  return p;
}

QPolynomial QPolynomial::with_cutoff(int cutoff) const {
  QPolynomial p(cutoff);
  for (const auto& [m, c] : terms_) p.add_term(m, c);
  return p;
}

ParamPoly QPolynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? ParamPoly() : it->second;
}

void QPolynomial::check_cutoff(const Monomial& m) const {
  if (m.max_variable() > cutoff_) throw CutoffError(m.max_variable(), cutoff_);
}

void QPolynomial::add_term(const Monomial& m, const ParamPoly& c) {
  if (c.is_zero()) return;
  check_cutoff(m);
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void QPolynomial::add_term(const Monomial& m, const ParamPoly& c, const Rational& scale) {
  if (c.is_zero() || scale == 0) return;
  check_cutoff(m);
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c * scale);
    return;
  }
  it->second.add_scaled(c, scale);
  if (it->second.is_zero()) terms_.erase(it);
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

QPolynomial& QPolynomial::operator-=(const QPolynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c, -1);
  return *this;
}

QPolynomial& QPolynomial::operator*=(const ParamPoly& c) {
  TermMap out;
  for (const auto& [m, v] : terms_) {
    ParamPoly p = v * c;
    if (!p.is_zero()) out.emplace(m, std::move(p));
  }
  terms_ = std::move(out);
  return *this;
}

QPolynomial QPolynomial::multiply(const QPolynomial& other, int max_grade) const {
  QPolynomial r(std::max(cutoff_, other.cutoff_));
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : other.terms_) {
      if (max_grade >= 0 && ma.grade() + mb.grade() > max_grade) continue;
      r.add_term(ma.times(mb), ca * cb);
    }
  }
  return r;
}

QPolynomial QPolynomial::derivative(int k) const {
  QPolynomial r(cutoff_);
  for (const auto& [m, c] : terms_) {
    const int e = m.exponent(k);
    if (e == 0) continue;
    std::vector<int> v = m.exponents();
    v[static_cast<std::size_t>(k - 1)] -= 1;
    r.add_term(Monomial(std::move(v)), c, e);
  }
  return r;
}

QPolynomial QPolynomial::times_variable(int k) const {
  QPolynomial r(cutoff_);
  const Monomial q = Monomial::variable(k);
  for (const auto& [m, c] : terms_) r.add_term(m.times(q), c);
  return r;
}

std::map<int, QPolynomial> QPolynomial::grade_decompose() const {
  std::map<int, QPolynomial> out;
  for (const auto& [m, c] : terms_) {
    auto it = out.try_emplace(m.grade(), cutoff_).first;
    it->second.terms_.emplace(m, c);
  }
  return out;
}

QPolynomial QPolynomial::homogeneous_part(int grade) const {
  QPolynomial r(cutoff_);
  for (const auto& [m, c] : terms_) {
    if (m.grade() == grade) r.terms_.emplace(m, c);
  }
  return r;
}

QPolynomial QPolynomial::truncated(int max_grade) const {
  QPolynomial r(cutoff_);
  for (const auto& [m, c] : terms_) {
    if (m.grade() <= max_grade) r.terms_.emplace(m, c);
  }
  return r;
}

int QPolynomial::max_grade() const { return terms_.empty() ? -1 : terms_.rbegin()->first.grade(); }

int QPolynomial::min_grade() const { return terms_.empty() ? -1 : terms_.begin()->first.grade(); }

QPolynomial QPolynomial::odd_part() const {
  QPolynomial r(cutoff_);
  for (const auto& [m, c] : terms_) {
    if (!m.has_even_variable()) r.terms_.emplace(m, c);
  }
  return r;
}

bool QPolynomial::depends_on_even_variables() const {
  return std::any_of(terms_.begin(), terms_.end(),
                     [](const auto& t) { return t.first.has_even_variable(); });
}

QPolynomial QPolynomial::substitute(const Bindings& bindings) const {
  QPolynomial r(cutoff_);
  for (const auto& [m, c] : terms_) r.add_term(m, c.substitute(bindings));
  return r;
}

std::string QPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    std::string coeff;
    bool negative = false;
    if (c.terms().size() == 1) {
      std::string s = c.to_string();
      negative = s.front() == '-';
      coeff = negative ? s.substr(1) : s;
      if (coeff == "1" && !m.is_one()) coeff.clear();
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
    if (!m.is_one()) {
      if (!coeff.empty()) os << "*";
      os << m.to_string();
    }
  }
  return os.str();
}

}  // namespace wtau
