#pragma once

// Problem-file serialization (schema "zuslab/1"). Complex scalars are
// [re, im] pairs, matrices are row-major nested arrays, and states carry
// their subsystem split explicitly. Deserialization validates with the
// file's own tolerance block (defaults when absent).

#include "zuslab/quantum.hpp"

#include <json.hpp>

#include <optional>

namespace zuslab {

using json = nlohmann::ordered_json;

inline const std::string kSchemaVersion = "zuslab/1";

struct SchemaError : Error {
  using Error::Error;
};

json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const json& j);

json state_to_json(const BipartiteState& state);
BipartiteState state_from_json(const json& j, const ToleranceConfig& tol = {});

json pvm_to_json(const Pvm& pvm);
Pvm pvm_from_json(const json& j, const ToleranceConfig& tol = {});

json tolerances_to_json(const ToleranceConfig& tol);
ToleranceConfig tolerances_from_json(const json& j);

struct ProblemFile {
  std::string version = kSchemaVersion;
  json metadata = json::object();  // free-form, echoed into reports
  BipartiteState state;
  std::vector<std::pair<std::string, PvmFamily>> families;  // insertion-ordered
  std::vector<Matrix> algebra_generators;                   // optional block
  ToleranceConfig tolerances;
  std::optional<std::uint64_t> seed;

  const PvmFamily* find_family(const std::string& name) const;
  PvmFamily merged_family() const;  // all PVMs across all families
};

json problem_to_json(const ProblemFile& p);
ProblemFile problem_from_json(const json& j);

ProblemFile load_problem(const std::string& path);
void save_problem(const ProblemFile& p, const std::string& path);

}  // namespace zuslab
