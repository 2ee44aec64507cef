#pragma once

// Bipartite density operators and projective measurements, with structured
// validation: checks return a report listing every violation found, and the
// validating constructors throw a ValidationError carrying that report.

#include "zuslab/linalg.hpp"

#include <optional>
#include <string>
#include <vector>

namespace zuslab {

struct Violation {
  std::string kind;    // e.g. "trace", "psd", "completeness"
  std::string detail;  // human-readable specifics
  double magnitude;    // size of the defect
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  std::string summary() const;
};

struct ValidationError : Error {
  explicit ValidationError(ValidationReport r);
  ValidationReport report;
};

// Density operator on C^{d_a} ⊗ C^{d_b} (row-major composite index).
struct BipartiteState {
  Matrix rho;
  Index d_a = 0;
  Index d_b = 0;
  Index dim() const { return d_a * d_b; }
};

ValidationReport check_state(const Matrix& rho, Index d_a, Index d_b,
                             const ToleranceConfig& tol = {});
BipartiteState validate_state(Matrix rho, Index d_a, Index d_b,
                              const ToleranceConfig& tol = {});

// Projection-valued measure on C^d. Labels default to "0", "1", ...
struct Pvm {
  std::vector<Matrix> projections;
  std::vector<std::string> labels;
  std::string name;
  Index dim() const { return projections.empty() ? 0 : projections.front().rows(); }
  size_t size() const { return projections.size(); }
};

ValidationReport check_pvm(const std::vector<Matrix>& projections,
                           const ToleranceConfig& tol = {});
Pvm validate_pvm(std::vector<Matrix> projections, std::vector<std::string> labels = {},
                 std::string name = {}, const ToleranceConfig& tol = {});

// A finite family of PVMs on a common space.
struct PvmFamily {
  std::vector<Pvm> pvms;
  Index dim() const { return pvms.empty() ? 0 : pvms.front().dim(); }
  size_t size() const { return pvms.size(); }
  const Pvm* find(const std::string& name) const;
};

ValidationReport check_family(const std::vector<Pvm>& pvms, const ToleranceConfig& tol = {});
PvmFamily validate_family(std::vector<Pvm> pvms, const ToleranceConfig& tol = {});

Vector max_entangled_vector(Index d);        // (1/√d) Σ_j |jj⟩
BipartiteState max_entangled_state(Index d);

// Small worked states and measurement families used across tests, the CLI
// catalog, and the acceptance suite.
namespace catalog {

BipartiteState bell();  // |Φ+⟩⟨Φ+| on C²⊗C²
BipartiteState mix();   // (|00⟩⟨00| + |11⟩⟨11|)/2

Pvm z_basis();  // {|0⟩⟨0|, |1⟩⟨1|}
Pvm x_basis();  // {|+⟩⟨+|, |−⟩⟨−|}

PvmFamily s1();  // {Z, X}
PvmFamily s2();  // {Z}

BipartiteState qutrit_phi3();  // |Φ3⟩⟨Φ3| on C³⊗C³
Pvm qutrit_p();                // {|0⟩⟨0|+|1⟩⟨1|, |2⟩⟨2|}
Pvm qutrit_q();                // {I−|v⟩⟨v|, |v⟩⟨v|}, v = (|1⟩+|2⟩)/√2
PvmFamily qutrit_family();     // {P, Q}

}  // namespace catalog

}  // namespace zuslab
