#include "wtau/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>

#include "wtau/error.hpp"
#include "wtau/parallel.hpp"
#include "wtau/serialize.hpp"

namespace wtau::cli {

namespace {

class UsageError : public Error {
 public:
  using Error::Error;
};

/// Verification ran and failed; the report has already been written.
struct VerificationFailed {};

struct Common {
  std::string model = "kw";
  std::vector<std::string> subst;
  std::string out_format;
  std::string output;
};

Bindings parse_bindings(const std::vector<std::string>& items) {
  Bindings b;
  for (const auto& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw UsageError("--subst expects NAME=VALUE, got '" + item + "'");
    const std::string name = item.substr(0, eq);
    const Rational value = parse_rational(item.substr(eq + 1));
    if (name == "N") {
      b.n = value;
    } else {
      throw UsageError("only N can be substituted, got '" + name + "'");
    }
  }
  return b;
}

std::filesystem::path resolve_output(const std::string& path) {
  std::filesystem::path p(path);
  if (p.is_relative()) {
    if (const char* dir = std::getenv("WTAU_OUTPUT_DIR"); dir && *dir) {
      return std::filesystem::path(dir) / p;
    }
  }
  return p;
}

/// Writes through a temporary file and a rename, so a failed run leaves no partial file.
void emit(const std::string& content, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << content;
    return;
  }
  const std::filesystem::path target = resolve_output(path);
  if (target.has_parent_path()) std::filesystem::create_directories(target.parent_path());
  std::filesystem::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw UsageError("cannot write " + tmp.string());
    f << content;
    f.close();
    if (!f) throw UsageError("cannot write " + tmp.string());
  }
  std::filesystem::rename(tmp, target);
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Engine default_engine(const ModelSpec& m) {
  return m.kind == ModelSpec::Kind::gkm ? Engine::fermionic : Engine::nodes;
}

void run_tau(const Common& c, const std::string& engine_name, int degree, bool reinstate,
             std::ostream& out) {
  const ModelSpec model = ModelSpec::parse(c.model);
  const Engine engine = engine_name.empty() ? default_engine(model) : parse_engine(engine_name);
  const Bindings bindings = parse_bindings(c.subst);
  if (model.kind == ModelSpec::Kind::gkm && engine != Engine::fermionic) {
    throw UsageError("engine " + to_string(engine) + " is not available for " + model.to_string());
  }
  const TauSeries tau = tau_model(model, engine, degree, bindings);
  const std::string format = c.out_format.empty() ? "json" : c.out_format;
  std::string content;
  if (format == "json") {
    content = dump(tau_to_json(tau, reinstate));
  } else if (format == "csv") {
    content = tau_to_csv(tau, reinstate);
  } else {
    content = tau_to_text(tau, reinstate);
  }
  emit(content, c.output, out);
}

std::vector<std::string> split_suites(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item == "sec5") item = "identities";
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

bool virasoro_model(const ModelSpec& m) {
  return m.kind != ModelSpec::Kind::gkm || m.n == 1;
}

void run_verify(const Common& c, const std::string& engine_name, const std::string& suite_text,
                int degree, std::ostream& out) {
  const ModelSpec model = ModelSpec::parse(c.model);
  const Engine engine = engine_name.empty() ? default_engine(model) : parse_engine(engine_name);
  if (model.kind == ModelSpec::Kind::gkm && engine != Engine::fermionic) {
    throw UsageError("engine " + to_string(engine) + " is not available for " + model.to_string());
  }
  const Bindings bindings = parse_bindings(c.subst);
  static const std::set<std::string> known{"virasoro", "hirota", "reduction", "identities", "miwa"};
  std::vector<std::string> suites =
      suite_text.empty() ? std::vector<std::string>{"virasoro", "hirota", "reduction", "identities", "miwa"}
                         : split_suites(suite_text);
  if (suite_text.empty() && !virasoro_model(model)) suites.erase(suites.begin());
  for (const auto& s : suites) {
    if (!known.count(s)) throw UsageError("unknown suite '" + s + "'");
    if (s == "virasoro" && !virasoro_model(model)) {
      throw UsageError("no Virasoro suite for " + model.to_string());
    }
  }
  if (degree < 4) throw UsageError("verify needs --degree >= 4");

  const TauSeries tau = tau_model(model, engine, degree, bindings);
  std::vector<ConstraintReport> reports;
  Json suite_list = Json::array();
  for (const auto& s : suites) {
    suite_list.push_back(s);
    if (s == "virasoro") {
      TauSeries t = tau;
      if (model.kind == ModelSpec::Kind::gkm) t.model = ModelSpec::kw();
      const bool kw = t.model.kind == ModelSpec::Kind::kw;
      const int m_min = kw ? -1 : 0;
      int m_max = m_min;
      while (m_max < 3 && degree - (kw ? 2 * (m_max + 1) + 3 : 2 * (m_max + 1) + 1) >= 0) ++m_max;
      for (auto& r : check_virasoro(t, m_min, m_max)) reports.push_back(std::move(r));
    } else if (s == "hirota") {
      reports.push_back(check_hirota_kp(tau, degree));
    } else if (s == "reduction") {
      if (model.kind == ModelSpec::Kind::gkm) {
        reports.push_back(check_reduction(tau, model.n + 1, false));
      } else {
        reports.push_back(check_reduction(tau, 2, true));
      }
    } else if (s == "identities") {
      for (auto& r : check_odd_node_identities(degree)) reports.push_back(std::move(r));
    } else if (s == "miwa") {
      Bindings at_one = bindings;
      at_one.hbar = Rational(1);
      const DiffOp b = build_model_ops(model).R.substitute(at_one);
      const auto basis = grassmannian_basis(b, 2, degree);
      reports.push_back(miwa_crosscheck(tau, basis, degree));
    }
  }
  bool all = true;
  Json checks = Json::array();
  for (const auto& r : reports) {
    all = all && r.pass;
    checks.push_back(report_to_json(r));
  }
  const std::string format = c.out_format.empty() ? "json" : c.out_format;
  std::string content;
  if (format == "json") {
    Json j;
    j["schema"] = kVerifySchema;
    j["model"] = model.to_string();
    j["engine"] = to_string(engine);
    j["degree"] = degree;
    j["bindings"] = bindings_to_json(bindings);
    j["suites"] = std::move(suite_list);
    j["checks"] = std::move(checks);
    j["pass"] = all;
    content = dump(j);
  } else {
    std::ostringstream os;
    for (const auto& r : reports) {
      os << (r.pass ? "PASS " : "FAIL ") << r.id << " (grade <= " << r.max_grade << ")";
      if (!r.note.empty()) os << " " << r.note;
      if (!r.residual.is_zero()) os << "\n  residual: " << r.residual.to_string();
      os << "\n";
    }
    content = os.str();
  }
  emit(content, c.output, out);
  if (!all) throw VerificationFailed{};
}

void run_ops(const Common& c, const std::string& which, std::ostream& out) {
  const ModelSpec model = ModelSpec::parse(c.model);
  const Bindings bindings = parse_bindings(c.subst);
  std::vector<std::pair<std::string, DiffOp>> ops;
  for (auto& [name, op] : named_model_ops(model)) ops.emplace_back(name, op.substitute(bindings));
  const std::string format = c.out_format.empty() ? "text" : c.out_format;
  const GradedOperator w = build_w_operator(model).substitute(bindings);

  if (which == "W") {
    if (format == "json") {
      Json comps = Json::array();
      for (const auto& [k, comp] : w.components()) {
        Json entry{{"grade", k}};
        if (const auto* nodes = std::get_if<NodeCombination>(&comp)) {
          Json list = Json::array();
          for (const auto& t : *nodes) {
            list.push_back({{"node", t.op.to_string()}, {"coeff", t.coefficient.to_string()}});
          }
          entry["nodes"] = std::move(list);
        } else {
          entry["generic"] = diffop_to_json("R", std::get<DiffOp>(comp));
        }
        comps.push_back(std::move(entry));
      }
      emit(dump({{"schema", kOpsSchema}, {"model", model.to_string()}, {"W", comps}}), c.output,
           out);
    } else {
      emit(w.to_string(), c.output, out);
    }
    return;
  }
  std::vector<std::pair<std::string, DiffOp>> selected;
  for (const auto& entry : ops) {
    if (which == "all" || which == entry.first) selected.push_back(entry);
  }
  if (selected.empty()) throw UsageError("unknown operator '" + which + "' for " + model.to_string());
  if (format == "json") {
    Json list = Json::array();
    for (const auto& [name, op] : selected) list.push_back(diffop_to_json(name, op));
    emit(dump({{"schema", kOpsSchema}, {"model", model.to_string()}, {"operators", list}}),
         c.output, out);
  } else if (selected.size() == 1) {
    emit(selected.front().second.to_string() + "\n", c.output, out);
  } else {
    std::string text;
    for (const auto& [name, op] : selected) text += name + " = " + op.to_string() + "\n";
    emit(text, c.output, out);
  }
}

void run_grassmannian(const Common& c, int count, int order, bool adjoint, std::ostream& out) {
  const ModelSpec model = ModelSpec::parse(c.model);
  Bindings bindings = parse_bindings(c.subst);
  bindings.hbar = Rational(1);
  DiffOp b = build_model_ops(model).R.substitute(bindings);
  if (adjoint) b = -b.adjoint();
  const auto basis = grassmannian_basis(b, count, order);
  const ConstraintReport check = verify_basis(b, basis);
  if (!check.pass) throw InternalConsistencyError("basis relation fails: " + check.note);
  const std::string format = c.out_format.empty() ? "json" : c.out_format;
  if (format == "json") {
    Json j;
    j["schema"] = kBasisSchema;
    j["model"] = model.to_string();
    j["operator"] = adjoint ? "-R*" : "R";
    j["b"] = b.to_string();
    j["order"] = order;
    j["basis"] = basis_to_json(basis);
    emit(dump(j), c.output, out);
  } else {
    std::ostringstream os;
    for (const auto& v : basis) {
      os << "Phi_" << v.index << " =";
      bool first = true;
      for (auto it = v.coefficients.rbegin(); it != v.coefficients.rend(); ++it) {
        os << (first ? " " : " + ") << "(" << it->second.to_string() << ")*z^" << it->first;
        first = false;
      }
      os << " + O(z^" << -(order + 1) << ")\n";
    }
    emit(os.str(), c.output, out);
  }
}

}  // namespace

int main(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Tau-functions of the KP hierarchy from a single W(1+infinity) constraint"};
  app.require_subcommand(1);
  int threads = 1;
  app.add_option("--threads", threads, "worker threads for operator application")
      ->check(CLI::Range(1, 256));
  app.fallthrough();

  Common common;
  auto add_common = [&](CLI::App* sub, const std::vector<std::string>& formats) {
    sub->add_option("--model", common.model, "kw, bgw or gkm:<n>");
    sub->add_option("--subst", common.subst, "parameter binding, e.g. N=1/2");
    sub->add_option("--out", common.out_format, "output format")->check(CLI::IsMember(formats));
    sub->add_option("--output", common.output, "output file (default stdout)");
  };

  std::string engine;
  int degree = 0;
  bool reinstate = false;
  CLI::App* tau = app.add_subcommand("tau", "compute a tau-function series");
  add_common(tau, {"json", "csv", "text"});
  tau->add_option("--engine", engine, "nodes, fermionic or cutjoin");
  tau->add_option("--degree", degree, "grade cap D")->required()->check(CLI::NonNegativeNumber);
  tau->add_flag("--reinstate-hbar", reinstate, "multiply grade-d components by h^d");

  std::string suites;
  int verify_degree = 8;
  CLI::App* verify = app.add_subcommand("verify", "run verification suites");
  add_common(verify, {"json", "text"});
  verify->add_option("--engine", engine, "engine used to compute the series");
  verify->add_option("--suite", suites, "comma list of virasoro,hirota,reduction,identities,miwa");
  verify->add_option("--degree", verify_degree, "grade cap D")->check(CLI::NonNegativeNumber);

  std::string which = "all";
  CLI::App* ops = app.add_subcommand("ops", "print model operators");
  add_common(ops, {"json", "text"});
  ops->add_option("--which", which, "K, X, P, Kstar, Pstar, KstarPstar, PstarKstar, R, W or all");

  int count = 3;
  int order = 8;
  bool adjoint = false;
  CLI::App* grass = app.add_subcommand("grassmannian", "canonical basis of the Grassmannian point");
  add_common(grass, {"json", "text"});
  grass->add_option("--count", count, "number of basis vectors")->check(CLI::Range(1, 64));
  grass->add_option("--order", order, "truncation order in 1/z")->check(CLI::NonNegativeNumber);
  grass->add_flag("--adjoint", adjoint, "use -R* (the adjoint point)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  set_thread_count(threads);
  try {
    if (*tau) run_tau(common, engine, degree, reinstate, out);
    if (*verify) run_verify(common, engine, suites, verify_degree, out);
    if (*ops) run_ops(common, which, out);
    if (*grass) run_grassmannian(common, count, order, adjoint, out);
  } catch (const VerificationFailed&) {
    err << "verification failed\n";
    return kExitVerificationFailed;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitOk;
}

}  // namespace wtau::cli
