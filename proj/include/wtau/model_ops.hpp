#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "wtau/diffop.hpp"

namespace wtau {

/// Which tau-function: Kontsevich-Witten, generalized BGW, or monomial GKM
/// with potential degree n + 1 (kw is gkm with n = 1 in node form).
struct ModelSpec {
  enum class Kind { kw, bgw, gkm };

  Kind kind = Kind::kw;
  int n = 1;

  static ModelSpec kw() { return {Kind::kw, 1}; }
  static ModelSpec bgw() { return {Kind::bgw, 0}; }
  static ModelSpec gkm(int n) { return {Kind::gkm, n}; }

  /// "kw", "bgw" or "gkm:<n>".
  static ModelSpec parse(std::string_view text);
  std::string to_string() const;
  bool operator==(const ModelSpec&) const = default;
};

/// Kac-Schwarz data of a model and the derived D- operator R.
struct ModelOperators {
  DiffOp K;
  DiffOp X;
  DiffOp P;
  DiffOp K_adjoint;
  DiffOp P_adjoint;
  /// The operator b in D- with D + b a Kac-Schwarz operator of the tau-function.
  DiffOp R;
};

/// K_n = z + z^{-n-1}(D - n/2), X_n = z^{n+1}/(n+1), P_n = K_n^{n+1}/(n+1) - X_n,
/// R_n = -D - K_n^* P_n^*. Throws InternalConsistencyError if R_n is not in D-.
ModelOperators build_gkm_ops(int n);

/// K_N = z/h + D/2, X_N = z^2/h^2, P_N = (h^2/4) z^{-2}(D - 1/2)^2 + h z^{-1} D - (N^2 h^2/4) z^{-2},
/// R_N = -D - P_N^* K_N^* - P_N^*/4 - 1.
ModelOperators build_bgw_ops();

ModelOperators build_model_ops(const ModelSpec& model);

/// R_n from the closed product formula
/// -D - 1/(n+1) {z - z^{-n-1}(D - n/2)} {(z - z^{-n-1}(D - n/2))^{n+1} - z^{n+1}},
/// built without adjoints. Used to cross-check build_gkm_ops.
DiffOp gkm_r_closed_form(int n);

/// Named operators for dumping: K, X, P, Kstar, Pstar, KstarPstar (gkm) or PstarKstar (bgw), R.
std::vector<std::pair<std::string, DiffOp>> named_model_ops(const ModelSpec& model);

}  // namespace wtau
