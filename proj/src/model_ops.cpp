#include "wtau/model_ops.hpp"

#include <string>

#include "wtau/error.hpp"

namespace wtau {

ModelSpec ModelSpec::parse(std::string_view text) {
  if (text == "kw") return kw();
  if (text == "bgw") return bgw();
  if (text.substr(0, 4) == "gkm:") {
    std::string num(text.substr(4));
    std::size_t used = 0;
    int n = 0;
    try {
      n = std::stoi(num, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != num.size() || num.empty() || n < 1) {
      throw ParseError("gkm order must be an integer >= 1: '" + std::string(text) + "'");
    }
    return gkm(n);
  }
  throw ParseError("unknown model '" + std::string(text) + "' (expected kw, bgw or gkm:<n>)");
}

std::string ModelSpec::to_string() const {
  switch (kind) {
    case Kind::kw:
      return "kw";
    case Kind::bgw:
      return "bgw";
    case Kind::gkm:
      return "gkm:" + std::to_string(n);
  }
  return "?";
}

ModelOperators build_gkm_ops(int n) {
  if (n < 1) throw DomainError("gkm order must be >= 1");
  ModelOperators ops;
  const Rational half_n = ratio(n, 2);
  ops.K = DiffOp::z() + DiffOp::z(-n - 1) * (DiffOp::D() - DiffOp::constant(half_n));
  ops.X = DiffOp::monomial(n + 1, 0, ratio(1, n + 1));
  ops.P = power(ops.K, n + 1) * ParamPoly(ratio(1, n + 1)) - ops.X;
  ops.K_adjoint = ops.K.adjoint();
  ops.P_adjoint = ops.P.adjoint();
  ops.R = -DiffOp::D() - ops.K_adjoint * ops.P_adjoint;
  if (!ops.P_adjoint.in_d_minus()) {
    throw InternalConsistencyError("P_" + std::to_string(n) + "^* is not in D-: " +
                                   ops.P_adjoint.to_string());
  }
  if (!ops.R.in_d_minus()) {
    throw InternalConsistencyError("R_" + std::to_string(n) + " is not in D-: " + ops.R.to_string());
  }
  return ops;
}

ModelOperators build_bgw_ops() {
  ModelOperators ops;
  const ParamPoly h = ParamPoly::hbar();
  const ParamPoly h2 = h * h;
  const ParamPoly n2 = ParamPoly::N() * ParamPoly::N();
  const DiffOp shifted = DiffOp::z(-2) * power(DiffOp::D() - DiffOp::constant(ratio(1, 2)), 2);

  ops.K = DiffOp::monomial(1, 0, ParamPoly::monomial(1, 0, -1)) +
          DiffOp::D() * ParamPoly(ratio(1, 2));
  ops.X = DiffOp::monomial(2, 0, ParamPoly::monomial(1, 0, -2));
  ops.P = shifted * (h2 * ratio(1, 4)) + DiffOp::monomial(-1, 1, h) -
          DiffOp::monomial(-2, 0, n2 * h2 * ratio(1, 4));
  ops.K_adjoint = ops.K.adjoint();
  ops.P_adjoint = ops.P.adjoint();
  ops.R = -DiffOp::D() - ops.P_adjoint * ops.K_adjoint -
          ops.P_adjoint * ParamPoly(ratio(1, 4)) - DiffOp::constant(1);
  if (!ops.R.in_d_minus()) {
    throw InternalConsistencyError("R_N is not in D-: " + ops.R.to_string());
  }
  return ops;
}

ModelOperators build_model_ops(const ModelSpec& model) {
  switch (model.kind) {
    case ModelSpec::Kind::kw:
      return build_gkm_ops(1);
    case ModelSpec::Kind::gkm:
      return build_gkm_ops(model.n);
    case ModelSpec::Kind::bgw:
      return build_bgw_ops();
  }
  throw DomainError("unknown model");
}

DiffOp gkm_r_closed_form(int n) {
  const DiffOp twisted =
      DiffOp::z() - DiffOp::z(-n - 1) * (DiffOp::D() - DiffOp::constant(ratio(n, 2)));
  const DiffOp bracket = power(twisted, n + 1) - DiffOp::z(n + 1);
  return -DiffOp::D() - twisted * bracket * ParamPoly(ratio(1, n + 1));
}

std::vector<std::pair<std::string, DiffOp>> named_model_ops(const ModelSpec& model) {
  const ModelOperators ops = build_model_ops(model);
  std::vector<std::pair<std::string, DiffOp>> out{
      {"K", ops.K}, {"X", ops.X}, {"P", ops.P}, {"Kstar", ops.K_adjoint}, {"Pstar", ops.P_adjoint}};
  if (model.kind == ModelSpec::Kind::bgw) {
    out.emplace_back("PstarKstar", ops.P_adjoint * ops.K_adjoint);
  } else {
    out.emplace_back("KstarPstar", ops.K_adjoint * ops.P_adjoint);
  }
  out.emplace_back("R", ops.R);
  return out;
}

}  // namespace wtau
