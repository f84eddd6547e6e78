#include "wtau/node_ops.hpp"

#include <vector>

#include "wtau/parallel.hpp"

namespace wtau {

std::string NodeOp::to_string() const {
  std::string s;
  switch (kind) {
    case NodeKind::alpha:
      s = "alpha";
      break;
    case NodeKind::L:
      s = "L";
      break;
    case NodeKind::M:
      s = "M";
      break;
    case NodeKind::Q:
      s = "Q";
      break;
  }
  if (odd_reduced) s += "odd";
  return s + "[" + std::to_string(index) + "]";
}

namespace {

// Scratch exponent vector for one output term. Annihilation by alpha_k (k > 0)
// multiplies the weight by k * e_k; creation appends q_k.
struct Scratch {
  std::vector<int> e;
  Rational w;

  bool annihilate(int k) {
    if (k > static_cast<int>(e.size()) || e[static_cast<std::size_t>(k - 1)] == 0) return false;
    auto& slot = e[static_cast<std::size_t>(k - 1)];
    w *= k * slot;
    --slot;
    return true;
  }
  void create(int k) {
    if (k > static_cast<int>(e.size())) e.resize(static_cast<std::size_t>(k), 0);
    ++e[static_cast<std::size_t>(k - 1)];
  }
};

bool is_even(int k) { return k % 2 == 0; }

void emit(QPolynomial& out, Scratch s, const ParamPoly& c) {
  out.add_term(Monomial(std::move(s.e)), c, s.w);
}

void apply_alpha(int n, bool odd, const Monomial& m, const ParamPoly& c, QPolynomial& out) {
  if (n == 0 || (odd && is_even(n))) return;
  Scratch s{m.exponents(), 1};
  if (n < 0) {
    s.create(-n);
  } else if (!s.annihilate(n)) {
    return;
  }
  emit(out, std::move(s), c);
}

void apply_l(int n, bool odd, const Monomial& m, const ParamPoly& c, QPolynomial& out) {
  const Rational half = ratio(1, 2);
  // sum_{i>0, i+n>0} (i+n) q_i d/dq_{i+n}
  for (int k = 1; k <= m.max_variable(); ++k) {
    const int i = k - n;
    if (m.exponent(k) == 0 || i <= 0) continue;
    if (odd && (is_even(k) || is_even(i))) continue;
    Scratch s{m.exponents(), 1};
    s.annihilate(k);
    s.create(i);
    emit(out, std::move(s), c);
  }
  // 1/2 sum_{i+j=n} ij d^2/dq_i dq_j
  for (int i = 1; i < n; ++i) {
    const int j = n - i;
    if (odd && (is_even(i) || is_even(j))) continue;
    Scratch s{m.exponents(), half};
    if (!s.annihilate(i) || !s.annihilate(j)) continue;
    emit(out, std::move(s), c);
  }
  // 1/2 sum_{i+j=-n} q_i q_j
  for (int i = 1; i < -n; ++i) {
    const int j = -n - i;
    if (odd && (is_even(i) || is_even(j))) continue;
    Scratch s{m.exponents(), half};
    s.create(i);
    s.create(j);
    emit(out, std::move(s), c);
  }
}

void apply_m(int n, bool odd, const Monomial& m, const ParamPoly& c, QPolynomial& out) {
  const Rational third = ratio(1, 3);
  const int top = m.max_variable();
  // sum_{i,j>0, i+j+n>0} (i+j+n) q_i q_j d/dq_{i+j+n}
  for (int k = 1; k <= top; ++k) {
    if (m.exponent(k) == 0 || (odd && is_even(k))) continue;
    for (int i = 1; i < k - n; ++i) {
      const int j = k - n - i;
      if (odd && (is_even(i) || is_even(j))) continue;
      Scratch s{m.exponents(), 1};
      s.annihilate(k);
      s.create(i);
      s.create(j);
      emit(out, std::move(s), c);
    }
  }
  // sum_{i,j>0, i+j-n>0} ij q_{i+j-n} d^2/dq_i dq_j
  for (int i = 1; i <= top; ++i) {
    for (int j = 1; j <= top; ++j) {
      const int l = i + j - n;
      if (l <= 0) continue;
      if (odd && (is_even(i) || is_even(j) || is_even(l))) continue;
      Scratch s{m.exponents(), 1};
      if (!s.annihilate(i) || !s.annihilate(j)) continue;
      s.create(l);
      emit(out, std::move(s), c);
    }
  }
  // 1/3 sum_{i,j>0, n-i-j>0} ij(n-i-j) d^3/dq_i dq_j dq_{n-i-j}
  for (int i = 1; i < n; ++i) {
    for (int j = 1; i + j < n; ++j) {
      const int k = n - i - j;
      if (odd && (is_even(i) || is_even(j) || is_even(k))) continue;
      Scratch s{m.exponents(), third};
      if (!s.annihilate(i) || !s.annihilate(j) || !s.annihilate(k)) continue;
      emit(out, std::move(s), c);
    }
  }
  // 1/3 sum_{i,j>0, -n-i-j>0} q_i q_j q_{-n-i-j}
  for (int i = 1; i < -n; ++i) {
    for (int j = 1; i + j < -n; ++j) {
      const int l = -n - i - j;
      if (odd && (is_even(i) || is_even(j) || is_even(l))) continue;
      Scratch s{m.exponents(), third};
      s.create(i);
      s.create(j);
      s.create(l);
      emit(out, std::move(s), c);
    }
  }
}

// Enumerates ordered index tuples of a normal-ordered product acting on one monomial.
class NormalOrderedWalker {
 public:
  NormalOrderedWalker(int arity, int index, const TupleWeight& weight, bool odd,
                      const Monomial& m, const ParamPoly& c, QPolynomial& out)
      : arity_(arity),
        index_(index),
        weight_(weight),
        odd_(odd),
        c_(c),
        out_(out),
        creation_bound_(m.grade() - index),
        tuple_(static_cast<std::size_t>(arity), 0) {
    Scratch s{m.exponents(), 1};
    walk(0, 0, 0, s);
  }

 private:
  bool admissible(int a) const { return a != 0 && !(odd_ && is_even(a)); }

  // Creations are deferred to emission so that annihilators only see the input monomial.
  void walk(int pos, int sum, int created, Scratch s) {
    if (pos == arity_ - 1) {
      const int a = index_ - sum;
      if (!admissible(a)) return;
      if (a > 0) {
        if (!s.annihilate(a)) return;
      } else if (created - a > creation_bound_) {
        return;
      }
      tuple_[static_cast<std::size_t>(pos)] = a;
      const Rational w = weight_(tuple_);
      if (w == 0) return;
      s.w *= w;
      for (int b : tuple_) {
        if (b < 0) s.create(-b);
      }
      emit(out_, std::move(s), c_);
      return;
    }
    for (int k = 1; k <= static_cast<int>(s.e.size()); ++k) {
      if (s.e[static_cast<std::size_t>(k - 1)] == 0 || !admissible(k)) continue;
      Scratch next = s;
      next.annihilate(k);
      tuple_[static_cast<std::size_t>(pos)] = k;
      walk(pos + 1, sum + k, created, std::move(next));
    }
    for (int k = 1; created + k <= creation_bound_; ++k) {
      if (!admissible(-k)) continue;
      tuple_[static_cast<std::size_t>(pos)] = -k;
      walk(pos + 1, sum - k, created + k, s);
    }
  }

  int arity_;
  int index_;
  const TupleWeight& weight_;
  bool odd_;
  const ParamPoly& c_;
  QPolynomial& out_;
  int creation_bound_;
  std::vector<int> tuple_;
};

void apply_q(int n, bool odd, const Monomial& m, const ParamPoly& c, QPolynomial& out) {
  static const TupleWeight quarter = [](std::span<const int>) { return ratio(1, 4); };
  static const TupleWeight pair_correction = [](std::span<const int> a) {
    return ratio(-(a[0] + 1) * (a[1] + 1), 4);
  };
  NormalOrderedWalker(4, n, quarter, odd, m, c, out);
  NormalOrderedWalker(2, n, pair_correction, odd, m, c, out);
  const Rational l_weight = ratio((n + 2) * (n + 3), 10);
  if (l_weight != 0) apply_l(n, odd, m, c * l_weight, out);
}

}  // namespace

QPolynomial apply_node(const NodeOp& op, const QPolynomial& p) {
  return parallel_accumulate(
      p.terms(), QPolynomial(p.cutoff()),
      [&op](const Monomial& m, const ParamPoly& c, QPolynomial& out) {
        switch (op.kind) {
          case NodeKind::alpha:
            apply_alpha(op.index, op.odd_reduced, m, c, out);
            break;
          case NodeKind::L:
            apply_l(op.index, op.odd_reduced, m, c, out);
            break;
          case NodeKind::M:
            apply_m(op.index, op.odd_reduced, m, c, out);
            break;
          case NodeKind::Q:
            apply_q(op.index, op.odd_reduced, m, c, out);
            break;
        }
      });
}

QPolynomial apply_normal_ordered(int arity, int index, const TupleWeight& weight,
                                 const QPolynomial& p, bool odd_only) {
  QPolynomial out(p.cutoff());
  if (arity < 1) return out;
  for (const auto& [m, c] : p.terms()) {
    NormalOrderedWalker(arity, index, weight, odd_only, m, c, out);
  }
  return out;
}

}  // namespace wtau
