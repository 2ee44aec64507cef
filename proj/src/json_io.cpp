#include "zuslab/json_io.hpp"

#include <fstream>

namespace zuslab {

namespace {

double number_at(const json& j, const char* what) {
  if (!j.is_number()) throw SchemaError(std::string("expected a number for ") + what);
  return j.get<double>();
}

}  // namespace

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Index c = 0; c < m.cols(); ++c)
      row.push_back(json::array({m(r, c).real(), m(r, c).imag()}));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw SchemaError("matrix: expected a non-empty array of rows");
  const Index rows = static_cast<Index>(j.size());
  if (!j[0].is_array() || j[0].empty())
    throw SchemaError("matrix: expected non-empty rows");
  const Index cols = static_cast<Index>(j[0].size());
  Matrix m(rows, cols);
  for (Index r = 0; r < rows; ++r) {
    const json& row = j[static_cast<size_t>(r)];
    if (!row.is_array() || static_cast<Index>(row.size()) != cols)
      throw SchemaError("matrix: ragged rows");
    for (Index c = 0; c < cols; ++c) {
      const json& e = row[static_cast<size_t>(c)];
      if (!e.is_array() || e.size() != 2)
        throw SchemaError("matrix: entries must be [re, im] pairs");
      m(r, c) = Cplx(number_at(e[0], "matrix entry"), number_at(e[1], "matrix entry"));
    }
  }
  return m;
}

json state_to_json(const BipartiteState& state) {
  return json{{"d_a", state.d_a}, {"d_b", state.d_b}, {"rho", matrix_to_json(state.rho)}};
}

BipartiteState state_from_json(const json& j, const ToleranceConfig& tol) {
  if (!j.is_object() || !j.contains("d_a") || !j.contains("d_b") || !j.contains("rho"))
    throw SchemaError("state: expected an object with d_a, d_b and rho");
  if (!j["d_a"].is_number_integer() || !j["d_b"].is_number_integer())
    throw SchemaError("state: d_a and d_b must be integers");
  return validate_state(matrix_from_json(j["rho"]), j["d_a"].get<Index>(),
                        j["d_b"].get<Index>(), tol);
}

json pvm_to_json(const Pvm& pvm) {
  json projections = json::array();
  for (const Matrix& p : pvm.projections) projections.push_back(matrix_to_json(p));
  return json{{"name", pvm.name}, {"labels", pvm.labels}, {"projections", std::move(projections)}};
}

Pvm pvm_from_json(const json& j, const ToleranceConfig& tol) {
  if (!j.is_object() || !j.contains("projections"))
    throw SchemaError("pvm: expected an object with a projections array");
  if (!j["projections"].is_array() || j["projections"].empty())
    throw SchemaError("pvm: projections must be a non-empty array");
  std::vector<Matrix> projections;
  for (const json& p : j["projections"]) projections.push_back(matrix_from_json(p));
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    if (!j["labels"].is_array()) throw SchemaError("pvm: labels must be an array of strings");
    for (const json& l : j["labels"]) {
      if (!l.is_string()) throw SchemaError("pvm: labels must be strings");
      labels.push_back(l.get<std::string>());
    }
  }
  std::string name = j.value("name", std::string{});
  return validate_pvm(std::move(projections), std::move(labels), std::move(name), tol);
}

json tolerances_to_json(const ToleranceConfig& tol) {
  return json{{"eq_tol", tol.eq_tol}, {"rank_tol", tol.rank_tol}, {"psd_tol", tol.psd_tol}};
}

ToleranceConfig tolerances_from_json(const json& j) {
  if (!j.is_object()) throw SchemaError("tolerances: expected an object");
  ToleranceConfig tol;
  tol.eq_tol = j.contains("eq_tol") ? number_at(j["eq_tol"], "eq_tol") : tol.eq_tol;
  tol.rank_tol = j.contains("rank_tol") ? number_at(j["rank_tol"], "rank_tol") : tol.rank_tol;
  tol.psd_tol = j.contains("psd_tol") ? number_at(j["psd_tol"], "psd_tol") : tol.psd_tol;
  if (tol.eq_tol <= 0 || tol.rank_tol <= 0 || tol.psd_tol <= 0)
    throw SchemaError("tolerances: all tolerances must be positive");
  return tol;
}

const PvmFamily* ProblemFile::find_family(const std::string& name) const {
  for (const auto& [fname, fam] : families)
    if (fname == name) return &fam;
  return nullptr;
}

PvmFamily ProblemFile::merged_family() const {
  PvmFamily merged;
  for (const auto& [fname, fam] : families)
    for (const Pvm& pvm : fam.pvms) merged.pvms.push_back(pvm);
  return merged;
}

json problem_to_json(const ProblemFile& p) {
  json j;
  j["version"] = p.version;
  if (!p.metadata.is_null() && !(p.metadata.is_object() && p.metadata.empty()))
    j["metadata"] = p.metadata;
  j["state"] = state_to_json(p.state);
  json families = json::object();
  for (const auto& [name, fam] : p.families) {
    json pvms = json::array();
    for (const Pvm& pvm : fam.pvms) pvms.push_back(pvm_to_json(pvm));
    families[name] = json{{"pvms", std::move(pvms)}};
  }
  j["pvm_families"] = std::move(families);
  if (!p.algebra_generators.empty()) {
    json gens = json::array();
    for (const Matrix& g : p.algebra_generators) gens.push_back(matrix_to_json(g));
    j["algebra_generators"] = std::move(gens);
  }
  j["tolerances"] = tolerances_to_json(p.tolerances);
  if (p.seed) j["seed"] = *p.seed;
  return j;
}

ProblemFile problem_from_json(const json& j) {
  if (!j.is_object()) throw SchemaError("problem file: expected a JSON object");
  ProblemFile p;
  if (!j.contains("version") || !j["version"].is_string())
    throw SchemaError("problem file: missing version string");
  p.version = j["version"].get<std::string>();
  if (p.version != kSchemaVersion)
    throw SchemaError("problem file: unsupported version '" + p.version + "' (expected " +
                      kSchemaVersion + ")");
  p.metadata = j.contains("metadata") ? j["metadata"] : json::object();
  p.tolerances = j.contains("tolerances") ? tolerances_from_json(j["tolerances"])
                                          : ToleranceConfig{};
  if (!j.contains("state")) throw SchemaError("problem file: missing state");
  p.state = state_from_json(j["state"], p.tolerances);

  if (!j.contains("pvm_families") || !j["pvm_families"].is_object() ||
      j["pvm_families"].empty())
    throw SchemaError("problem file: pvm_families must be a non-empty object");
  for (const auto& [name, fj] : j["pvm_families"].items()) {
    if (!fj.is_object() || !fj.contains("pvms") || !fj["pvms"].is_array() || fj["pvms"].empty())
      throw SchemaError("problem file: family '" + name + "' must hold a non-empty pvms array");
    std::vector<Pvm> pvms;
    for (const json& pj : fj["pvms"]) pvms.push_back(pvm_from_json(pj, p.tolerances));
    PvmFamily fam = validate_family(std::move(pvms), p.tolerances);
    if (fam.dim() != p.state.d_a)
      throw SchemaError("problem file: family '" + name + "' acts on dimension " +
                        std::to_string(fam.dim()) + ", state has d_a = " +
                        std::to_string(p.state.d_a));
    p.families.emplace_back(name, std::move(fam));
  }

  if (j.contains("algebra_generators")) {
    if (!j["algebra_generators"].is_array())
      throw SchemaError("problem file: algebra_generators must be an array");
    for (const json& gj : j["algebra_generators"]) {
      Matrix g = matrix_from_json(gj);
      if (g.rows() != p.state.d_a || g.cols() != p.state.d_a)
        throw SchemaError("problem file: algebra generator has the wrong shape");
      p.algebra_generators.push_back(std::move(g));
    }
  }
  if (j.contains("seed")) {
    if (!j["seed"].is_number_unsigned())
      throw SchemaError("problem file: seed must be a non-negative integer");
    p.seed = j["seed"].get<std::uint64_t>();
  }
  return p;
}

ProblemFile load_problem(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaError("cannot parse '" + path + "': " + e.what());
  }
  return problem_from_json(j);
}

void save_problem(const ProblemFile& p, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw SchemaError("cannot write '" + path + "'");
  out << problem_to_json(p).dump(2) << "\n";
}

}  // namespace zuslab
