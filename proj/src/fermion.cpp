#include "wtau/fermion.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <mutex>
#include <sstream>

#include "wtau/error.hpp"
#include "wtau/parallel.hpp"

namespace wtau {

// ---- FermionState

FermionState FermionState::vacuum() { return basis(Partition()); }

FermionState FermionState::basis(const Partition& lambda, const ParamPoly& c) {
  FermionState s;
  s.add_term(lambda, c);
  return s;
}

ParamPoly FermionState::coefficient(const Partition& lambda) const {
  auto it = terms_.find(lambda);
  return it == terms_.end() ? ParamPoly() : it->second;
}

void FermionState::add_term(const Partition& lambda, const ParamPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(lambda, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

FermionState& FermionState::operator+=(const FermionState& other) {
  for (const auto& [l, c] : other.terms_) add_term(l, c);
  return *this;
}

FermionState& FermionState::operator-=(const FermionState& other) {
  for (const auto& [l, c] : other.terms_) add_term(l, -c);
  return *this;
}

FermionState& FermionState::operator*=(const ParamPoly& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [l, v] : terms_) v *= c;
  return *this;
}

FermionState FermionState::substitute(const Bindings& bindings) const {
  FermionState out;
  for (const auto& [l, c] : terms_) out.add_term(l, c.substitute(bindings));
  return out;
}

std::string FermionState::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [l, c] : terms_) {
    if (!first) s += " + ";
    first = false;
    const std::string cs = c.to_string();
    s += (cs.find(' ') == std::string::npos ? cs : "(" + cs + ")") + "*" + l.to_string();
  }
  return s;
}

// ---- Maya diagram moves

namespace {

/// Calls visit(nu, sign, x) for every particle x of lambda that can move to x + s,
/// where sign is the fermionic sign of the move. Positions x_i = lambda_i - i.
template <class Visit>
void move_particles(const Partition& lambda, int s, Visit&& visit) {
  const int len = lambda.length() + s + 1;
  std::vector<int> xs(static_cast<std::size_t>(len));
  for (int i = 0; i < len; ++i) xs[static_cast<std::size_t>(i)] = lambda.part(i) - i;
  // xs is strictly decreasing
  for (int i = 0; i < len; ++i) {
    const int x = xs[static_cast<std::size_t>(i)];
    const int y = x + s;
    int j = i;  // particles strictly between x and y sit at indices [j, i)
    bool blocked = false;
    while (j > 0 && xs[static_cast<std::size_t>(j - 1)] <= y) {
      if (xs[static_cast<std::size_t>(j - 1)] == y) {
        blocked = true;
        break;
      }
      --j;
    }
    if (blocked) continue;
    const int between = i - j;
    std::vector<int> moved(xs);
    moved.erase(moved.begin() + i);
    moved.insert(moved.begin() + j, y);
    std::vector<int> parts(moved.size());
    for (std::size_t k = 0; k < moved.size(); ++k) parts[k] = moved[k] + static_cast<int>(k);
    visit(Partition(std::move(parts)), between % 2 ? -1 : 1, x);
  }
}

}  // namespace

FermionState add_border_strips(const FermionState& s, int k) {
  if (k < 1) throw DomainError("border strip size must be positive");
  FermionState out;
  for (const auto& [lambda, c] : s.terms()) {
    move_particles(lambda, k, [&](Partition nu, int sign, int) {
      out.add_term(nu, sign > 0 ? c : -c);
    });
  }
  return out;
}

std::string WedgeConvention::to_string() const {
  std::ostringstream os;
  os << "eps=" << overall_sign << " sigma=" << weight_sign << " delta=" << wtau::to_string(offset)
     << " grade_sign=" << (grade_sign ? 1 : 0) << " transpose=" << (transpose ? 1 : 0);
  return os.str();
}

FermionState wedge_apply(const WedgeConvention& conv, const DiffOp& a, const FermionState& s) {
  struct Component {
    int s;
    std::vector<std::pair<int, ParamPoly>> by_power;
  };
  std::vector<Component> comps;
  for (const auto& [grade, op] : a.grade_components()) {
    Component comp{grade, {}};
    for (const auto& [key, c] : op.terms()) comp.by_power.emplace_back(key.d_power, c);
    comps.push_back(std::move(comp));
  }
  auto work = [&](const Partition& lambda, const ParamPoly& c, FermionState& out) {
    const Partition src = conv.transpose ? lambda.transpose() : lambda;
    for (const auto& comp : comps) {
      int base_sign = conv.overall_sign;
      if (conv.grade_sign && comp.s % 2) base_sign = -base_sign;
      move_particles(src, comp.s, [&](Partition nu, int sign, int x) {
        const Rational w = conv.weight_sign * (Rational(x) + conv.offset);
        ParamPoly weight;
        for (const auto& [m, coef] : comp.by_power) weight.add_scaled(coef, power(w, m));
        if (weight.is_zero()) return;
        weight *= c;
        weight *= Rational(sign * base_sign);
        out.add_term(conv.transpose ? nu.transpose() : nu, weight);
      });
    }
  };
  return parallel_accumulate(s.terms(), FermionState(), work);
}

// ---- Schur functions

namespace {

/// Complete (dual = false) or elementary (dual = true) symmetric function of degree n.
QPolynomial complete_or_elementary(int n, bool dual) {
  QPolynomial out(std::max(n, 1));
  for (const Partition& mu : partitions_of(n)) {
    std::vector<int> exps(static_cast<std::size_t>(n), 0);
    for (int p : mu.parts()) ++exps[static_cast<std::size_t>(p - 1)];
    Rational c = ratio(1, centralizer_order(mu));
    if (dual && (n - mu.length()) % 2) c = -c;
    out.add_term(Monomial(exps), c);
  }
  return out;
}

QPolynomial jacobi_trudi(const Partition& lambda) {
  const int cutoff = std::max(lambda.weight(), 1);
  // Use whichever determinant is smaller.
  const bool dual = lambda.parts().empty() ? false : lambda.part(0) < lambda.length();
  const Partition rows = dual ? lambda.transpose() : lambda;
  const int n = rows.length();
  if (n == 0) return QPolynomial::one(cutoff);

  std::map<int, QPolynomial> basic;
  auto entry = [&](int r, int c) -> const QPolynomial* {
    const int deg = rows.part(r) - r + c;
    if (deg < 0) return nullptr;
    auto it = basic.find(deg);
    if (it == basic.end()) {
      it = basic.emplace(deg, deg == 0 ? QPolynomial::one(cutoff)
                                       : complete_or_elementary(deg, dual).with_cutoff(cutoff))
               .first;
    }
    return &it->second;
  };

  const unsigned full = (1u << n) - 1;
  std::map<unsigned, QPolynomial> memo;
  std::function<QPolynomial(unsigned)> minor = [&](unsigned used) -> QPolynomial {
    if (used == full) return QPolynomial::one(cutoff);
    if (auto it = memo.find(used); it != memo.end()) return it->second;
    const int r = std::popcount(used);
    QPolynomial acc(cutoff);
    int unused_before = 0;
    for (int c = 0; c < n; ++c) {
      if (used & (1u << c)) continue;
      const QPolynomial* a = entry(r, c);
      if (a) {
        QPolynomial term = a->multiply(minor(used | (1u << c)));
        if (unused_before % 2) acc -= term;
        else acc += term;
      }
      ++unused_before;
    }
    memo.emplace(used, acc);
    return acc;
  };
  return minor(0);
}

std::mutex schur_mutex;
std::map<Partition, QPolynomial>& schur_cache() {
  static std::map<Partition, QPolynomial> cache;
  return cache;
}

std::mutex b2f_mutex;
std::map<Monomial, FermionState>& b2f_cache() {
  static std::map<Monomial, FermionState> cache;
  return cache;
}

FermionState monomial_to_fermion(const Monomial& m) {
  {
    std::lock_guard lock(b2f_mutex);
    auto it = b2f_cache().find(m);
    if (it != b2f_cache().end()) return it->second;
  }
  FermionState st = FermionState::vacuum();
  for (int k = 1; k <= m.max_variable(); ++k) {
    for (int e = 0; e < m.exponent(k); ++e) st = add_border_strips(st, k);
  }
  std::lock_guard lock(b2f_mutex);
  b2f_cache().emplace(m, st);
  return st;
}

}  // namespace

QPolynomial schur_polynomial(const Partition& lambda, int cutoff) {
  QPolynomial s(1);
  {
    std::lock_guard lock(schur_mutex);
    auto it = schur_cache().find(lambda);
    if (it != schur_cache().end()) s = it->second;
  }
  if (s.is_zero()) {
    s = jacobi_trudi(lambda);
    std::lock_guard lock(schur_mutex);
    schur_cache().emplace(lambda, s);
  }
  return s.with_cutoff(cutoff);
}

QPolynomial fermion_to_boson(const FermionState& s, int cutoff) {
  auto work = [&](const Partition& lambda, const ParamPoly& c, QPolynomial& out) {
    const QPolynomial schur = schur_polynomial(lambda, std::max(lambda.weight(), 1));
    for (const auto& [m, v] : schur.terms()) out.add_term(m, c, v.constant_term());
  };
  return parallel_accumulate(s.terms(), QPolynomial(cutoff), work);
}

FermionState boson_to_fermion(const QPolynomial& p) {
  FermionState out;
  for (const auto& [m, c] : p.terms()) {
    FermionState st = monomial_to_fermion(m);
    st *= c;
    out += st;
  }
  return out;
}

// ---- node symbols

DiffOp node_symbol(const NodeOp& op) {
  const int n = op.index;
  const Rational r(n);
  switch (op.kind) {
    case NodeKind::alpha:
      return DiffOp::monomial(n, 0, -1);
    case NodeKind::L:
      return -to_D_form(n + 1, 1) - DiffOp::monomial(n, 0, ratio(n + 1, 2));
    case NodeKind::M: {
      DiffOp a = -to_D_form(n + 2, 2) - ParamPoly(r + 2) * to_D_form(n + 1, 1);
      Rational c = (r + 1) * (r + 2) / 6;
      return a - DiffOp::monomial(n, 0, c);
    }
    case NodeKind::Q: {
      DiffOp a = -to_D_form(n + 3, 3);
      a -= ParamPoly(ratio(3, 2) * (r + 3)) * to_D_form(n + 2, 2);
      a -= ParamPoly(ratio(3, 5) * (r + 2) * (r + 3)) * to_D_form(n + 1, 1);
      Rational c = (r + 1) * (r + 2) * (r + 3) / 20;
      return a - DiffOp::monomial(n, 0, c);
    }
  }
  throw DomainError("unknown node kind");
}

// ---- FermionEngine

const WedgeConvention& FermionEngine::convention() const {
  if (!convention_) throw ConfigurationError("fermion engine used before calibration");
  return *convention_;
}

FermionState FermionEngine::onebody_apply(const DiffOp& a, const FermionState& s) const {
  if (!a.in_d_minus()) throw DomainError("one-body operator not in D-: " + a.to_string());
  return wedge_apply(convention(), a, s);
}

QPolynomial FermionEngine::apply_bosonic(const DiffOp& a, const QPolynomial& p) const {
  return fermion_to_boson(onebody_apply(a, boson_to_fermion(p)), p.cutoff());
}

CalibrationReport FermionEngine::calibrate(int max_grade) {
  struct Identity {
    std::string name;
    DiffOp symbol;
    std::vector<std::pair<FermionState, FermionState>> cases;  // input, expected
  };
  const int cutoff = 2 * max_grade;
  std::vector<QPolynomial> monomials;
  for (int g = 0; g <= max_grade; ++g) {
    for (const Partition& mu : partitions_of(g)) {
      std::vector<int> exps(static_cast<std::size_t>(std::max(g, 1)), 0);
      for (int p : mu.parts()) ++exps[static_cast<std::size_t>(p - 1)];
      monomials.push_back(QPolynomial::from_monomial(Monomial(exps), 1, cutoff));
    }
  }
  std::vector<Identity> identities;
  auto add_identity = [&](const NodeOp& op, const std::string& name) {
    Identity id{name, node_symbol(op), {}};
    for (const QPolynomial& p : monomials) {
      id.cases.emplace_back(boson_to_fermion(p), boson_to_fermion(apply_node(op, p)));
    }
    identities.push_back(std::move(id));
  };
  for (int k = 1; k <= 6; ++k) {
    add_identity(NodeOp::alpha(-k), "W[-z^-" + std::to_string(k) + "] = q" + std::to_string(k));
  }
  for (NodeKind kind : {NodeKind::L, NodeKind::M, NodeKind::Q}) {
    for (int n = -6; n <= -1; ++n) {
      NodeOp op{kind, n, false};
      add_identity(op, "W[symbol of " + op.to_string() + "] = " + op.to_string());
    }
  }

  CalibrationReport report;
  report.max_grade = max_grade;
  for (const auto& id : identities) report.identities_checked += static_cast<int>(id.cases.size());

  std::optional<WedgeConvention> best;
  int best_passed = -1;
  std::string best_failure;
  for (int eps : {1, -1}) {
    for (int sigma : {1, -1}) {
      for (int twice_delta = -4; twice_delta <= 4; ++twice_delta) {
        for (bool gs : {false, true}) {
          for (bool tr : {false, true}) {
            WedgeConvention conv{eps, sigma, ratio(twice_delta, 2), gs, tr};
            conv.offset.canonicalize();
            ++report.candidates_tried;
            int passed = 0;
            std::string failure;
            for (const auto& id : identities) {
              for (const auto& [in, expected] : id.cases) {
                if (wedge_apply(conv, id.symbol, in) != expected) {
                  failure = id.name;
                  break;
                }
                ++passed;
              }
              if (!failure.empty()) break;
            }
            if (failure.empty()) {
              report.passing.push_back(conv);
            } else if (passed > best_passed) {
              best_passed = passed;
              best = conv;
              best_failure = failure;
            }
          }
        }
      }
    }
  }
  if (report.passing.empty()) {
    throw ConfigurationError("fermion calibration failed: no convention satisfies all checks; "
                             "best candidate (" + best->to_string() + ") fails " + best_failure);
  }
  report.convention = report.passing.front();
  convention_ = report.convention;
  return report;
}

const FermionEngine& FermionEngine::shared() {
  static const FermionEngine engine = [] {
    FermionEngine e;
    e.calibrate();
    return e;
  }();
  return engine;
}

}  // namespace wtau
