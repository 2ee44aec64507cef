#pragma once

// Structural consequences of a common zero-uncertainty state whose measured
// projections generate the full matrix algebra: the state must be pure and
// maximally entangled. verify_rigidity checks the hypotheses and the
// conclusions independently and flags any genuine counterexample.

#include "zuslab/cp_maps.hpp"
#include "zuslab/star_algebra.hpp"

namespace zuslab {

struct NotPure : Error {
  using Error::Error;
};

// Decision threshold for "pure / maximally entangled": purity within this of
// 1, and ‖ρ_A − I/d‖ within this of 0. Deliberately looser than eq_tol so a
// state that is pure up to accumulated roundoff still counts.
inline constexpr double kMaxEntangledTol = 1e-8;

double purity(const BipartiteState& state);  // Tr(ρ²)
Matrix reduced_a(const BipartiteState& state);
Matrix reduced_b(const BipartiteState& state);
double maximally_mixed_defect(const BipartiteState& state);  // ‖ρ_A − I/d_a‖

// Squared Schmidt coefficients (descending, padded semantics: exactly
// min(d_a, d_b) values). Requires a pure state.
std::vector<double> schmidt_coefficients(const BipartiteState& state,
                                         const ToleranceConfig& tol = {});

struct RigidityReport {
  struct {
    bool dims_equal = false;
    bool common_zus = false;
    bool algebra_full = false;
  } hypotheses;

  Index algebra_dim = 0;
  double worst_overlap = 0.0;

  struct {
    double purity = 0.0;
    Index kraus_rank = 0;
    double rho_a_defect = 0.0;
    std::vector<double> schmidt;  // empty when the state is not pure
    bool is_max_entangled = false;
  } conclusions;

  bool hypotheses_hold() const {
    return hypotheses.dims_equal && hypotheses.common_zus && hypotheses.algebra_full;
  }
  // True only if the hypotheses hold and a conclusion fails — i.e. a genuine
  // counterexample to the theorem, which should never happen.
  bool theorem_violation = false;
};

RigidityReport verify_rigidity(const BipartiteState& state, const PvmFamily& family,
                               const ToleranceConfig& tol = {});

}  // namespace zuslab
