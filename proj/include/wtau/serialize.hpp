#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "wtau/fermion.hpp"
#include "wtau/grassmannian.hpp"
#include "wtau/tau.hpp"
#include "wtau/verify.hpp"

namespace wtau {

using Json = nlohmann::ordered_json;

inline constexpr const char* kTauSchema = "wtau.tau/1";
inline constexpr const char* kVerifySchema = "wtau.verify/1";
inline constexpr const char* kOpsSchema = "wtau.ops/1";
inline constexpr const char* kBasisSchema = "wtau.basis/1";

/// With reinstate_hbar each grade-d coefficient is multiplied by h^d.
Json tau_to_json(const TauSeries& tau, bool reinstate_hbar = false);
/// Inverse of tau_to_json (without reinstated h). Throws ParseError.
TauSeries tau_from_json(const Json& j);
/// Long format: header "grade,monomial,coeff", one row per term.
std::string tau_to_csv(const TauSeries& tau, bool reinstate_hbar = false);
std::string tau_to_text(const TauSeries& tau, bool reinstate_hbar = false);

Json bindings_to_json(const Bindings& b);
Json diffop_to_json(const std::string& name, const DiffOp& op);
Json fermion_state_to_json(const FermionState& s);
Json report_to_json(const ConstraintReport& r);
Json basis_to_json(const std::vector<BasisVector>& basis);

}  // namespace wtau
