#pragma once

#include <functional>
#include <span>
#include <string>

#include "wtau/qpoly.hpp"

namespace wtau {

/// Spin-graded node operators of W_{1+infinity} on the bosonic Fock space.
enum class NodeKind { alpha, L, M, Q };

struct NodeOp {
  NodeKind kind = NodeKind::alpha;
  int index = 0;
  /// Drop every term that contains an even variable q_{2k} or derivative in q_{2k}.
  bool odd_reduced = false;

  static NodeOp alpha(int n) { return {NodeKind::alpha, n, false}; }
  static NodeOp L(int n) { return {NodeKind::L, n, false}; }
  static NodeOp M(int n) { return {NodeKind::M, n, false}; }
  static NodeOp Q(int n) { return {NodeKind::Q, n, false}; }
  NodeOp odd() const { return {kind, index, true}; }

  /// Grade raised by the operator (= -index).
  int grade_shift() const { return -index; }
  std::string to_string() const;
  bool operator==(const NodeOp&) const = default;
};

/// alpha_n = q_{-n} (n < 0), n d/dq_n (n > 0), 0 (n = 0).
/// L_n = sum (i+n) q_i d_{i+n} + 1/2 sum ij d_i d_j + 1/2 sum q_i q_j.
/// M_n from its four-sum expansion; Q_n = 1/4 sum :aaaa: - 1/4 sum (a+1)(b+1) :aa:
/// + (n+2)(n+3)/10 L_n. Throws CutoffError rather than truncating.
QPolynomial apply_node(const NodeOp& op, const QPolynomial& p);

using TupleWeight = std::function<Rational(std::span<const int>)>;

/// sum over ordered tuples a_1 + ... + a_r = index of weight(a) :alpha_{a_1}...alpha_{a_r}:,
/// annihilators acting before creators and alpha_0 = 0.
QPolynomial apply_normal_ordered(int arity, int index, const TupleWeight& weight,
                                 const QPolynomial& p, bool odd_only = false);

}  // namespace wtau
