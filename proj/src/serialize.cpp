#include "wtau/serialize.hpp"

#include <sstream>

#include "wtau/error.hpp"

namespace wtau {

namespace {

QPolynomial hbar_scaled(const QPolynomial& p, int d, bool reinstate) {
  return reinstate ? p * ParamPoly::monomial(1, 0, d) : p;
}

Json terms_to_json(const QPolynomial& p) {
  Json terms = Json::array();
  for (const auto& [m, c] : p.terms()) {
    terms.push_back({{"monomial", m.to_string()}, {"coeff", c.to_string()}});
  }
  return terms;
}

}  // namespace

Json bindings_to_json(const Bindings& b) {
  Json j = Json::object();
  if (b.n) j["N"] = to_string(*b.n);
  if (b.hbar) j["h"] = to_string(*b.hbar);
  return j;
}

Json tau_to_json(const TauSeries& tau, bool reinstate_hbar) {
  Json j;
  j["schema"] = kTauSchema;
  j["model"] = tau.model.to_string();
  j["engine"] = to_string(tau.engine);
  j["degree"] = tau.degree;
  j["bindings"] = bindings_to_json(tau.bindings);
  j["hbar"] = reinstate_hbar ? "reinstated" : "grade";
  Json comps = Json::array();
  for (const auto& [d, p] : tau.components) {
    comps.push_back({{"grade", d}, {"terms", terms_to_json(hbar_scaled(p, d, reinstate_hbar))}});
  }
  j["components"] = std::move(comps);
  return j;
}

TauSeries tau_from_json(const Json& j) {
  try {
    if (j.at("schema").get<std::string>() != kTauSchema) throw ParseError("unknown tau schema");
    if (j.value("hbar", "grade") != "grade") {
      throw ParseError("cannot read a series with reinstated h");
    }
    TauSeries t;
    t.model = ModelSpec::parse(j.at("model").get<std::string>());
    t.engine = parse_engine(j.at("engine").get<std::string>());
    t.degree = j.at("degree").get<int>();
    if (t.degree < 0) throw ParseError("negative degree");
    const Json& b = j.at("bindings");
    if (b.contains("N")) t.bindings.n = parse_rational(b.at("N").get<std::string>());
    if (b.contains("h")) t.bindings.hbar = parse_rational(b.at("h").get<std::string>());
    const int cutoff = std::max(t.degree, 1);
    for (const Json& comp : j.at("components")) {
      const int d = comp.at("grade").get<int>();
      QPolynomial p(cutoff);
      for (const Json& term : comp.at("terms")) {
        const Monomial m = Monomial::parse(term.at("monomial").get<std::string>());
        if (m.grade() != d) throw ParseError("monomial " + m.to_string() + " not of grade " +
                                             std::to_string(d));
        p.add_term(m, ParamPoly::parse(term.at("coeff").get<std::string>()));
      }
      t.components.insert_or_assign(d, std::move(p));
    }
    return t;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed tau JSON: ") + e.what());
  }
}

std::string tau_to_csv(const TauSeries& tau, bool reinstate_hbar) {
  std::ostringstream os;
  os << "grade,monomial,coeff\n";
  for (const auto& [d, p] : tau.components) {
    const QPolynomial scaled = hbar_scaled(p, d, reinstate_hbar);
    for (const auto& [m, c] : scaled.terms()) {
      os << d << "," << m.to_string() << "," << c.to_string() << "\n";
    }
  }
  return os.str();
}

std::string tau_to_text(const TauSeries& tau, bool reinstate_hbar) {
  std::ostringstream os;
  for (const auto& [d, p] : tau.components) {
    os << "tau[" << d << "] = " << (p.is_zero() ? "0" : hbar_scaled(p, d, reinstate_hbar).to_string())
       << "\n";
  }
  return os.str();
}

Json diffop_to_json(const std::string& name, const DiffOp& op) {
  Json terms = Json::array();
  for (auto it = op.terms().rbegin(); it != op.terms().rend(); ++it) {
    terms.push_back({{"z", it->first.z_power}, {"D", it->first.d_power},
                     {"coeff", it->second.to_string()}});
  }
  return {{"name", name}, {"text", op.to_string()}, {"terms", std::move(terms)}};
}

Json fermion_state_to_json(const FermionState& s) {
  Json out = Json::array();
  for (const auto& [lambda, c] : s.terms()) {
    out.push_back({{"partition", lambda.to_string()}, {"coeff", c.to_string()}});
  }
  return out;
}

Json report_to_json(const ConstraintReport& r) {
  Json j{{"id", r.id}, {"pass", r.pass}, {"max_grade", r.max_grade}};
  if (!r.note.empty()) j["note"] = r.note;
  if (!r.residual.is_zero()) j["residual"] = r.residual.to_string();
  return j;
}

Json basis_to_json(const std::vector<BasisVector>& basis) {
  Json out = Json::array();
  for (const auto& v : basis) {
    Json coeffs = Json::array();
    for (auto it = v.coefficients.rbegin(); it != v.coefficients.rend(); ++it) {
      coeffs.push_back({{"power", it->first}, {"coeff", it->second.to_string()}});
    }
    Json c = Json::object();
    for (const auto& [i, ci] : v.c) c[std::to_string(i)] = ci.to_string();
    out.push_back({{"index", v.index}, {"order", v.order}, {"coefficients", std::move(coeffs)},
                   {"c", std::move(c)}});
  }
  return out;
}

}  // namespace wtau
