#pragma once

// The two completely positive maps attached to a bipartite state, and the
// zero-uncertainty decision built on them.
//
//   Λ(X) = Tr_A[(Xᵀ ⊗ I) ρ]            (B(H_A) → B(H_B), trace scaling)
//   Φ(X) = ρ_B^{-1/2} Λ(X) ρ_B^{-1/2}   (unital on the support S of ρ_B)
//
// The transpose sits inside Λ so that Λ(I) = ρ_B and conditional operators
// of a measurement {P_i} come out as Λ(P_iᵀ) = Tr_A[(P_i ⊗ I) ρ].

#include "zuslab/quantum.hpp"

#include <utility>

namespace zuslab {

class LambdaMap {
 public:
  explicit LambdaMap(BipartiteState state, ToleranceConfig tol = {});

  const BipartiteState& state() const { return state_; }
  const Matrix& rho_b() const { return rho_b_; }
  const Matrix& support() const { return support_proj_; }        // projection onto S
  const Matrix& support_basis() const { return support_iso_; }   // d_b × s isometry
  Index support_dim() const { return support_iso_.cols(); }
  const ToleranceConfig& tolerances() const { return tol_; }

  Matrix apply(const Matrix& x) const;      // Λ(X)
  Matrix apply_phi(const Matrix& x) const;  // Φ(X), as a d_b × d_b operator on S

 private:
  BipartiteState state_;
  ToleranceConfig tol_;
  Matrix rho_b_;
  Matrix support_proj_;
  Matrix support_iso_;
  Matrix rho_b_inv_sqrt_;
};

// Conditional operators Z_{i,α} = Tr_A[(P_α ⊗ I) ρ] of one PVM.
struct ConditionalOperators {
  std::string pvm_name;
  std::vector<std::string> labels;
  std::vector<Matrix> operators;
};

ConditionalOperators conditional_operators(const LambdaMap& map, const Pvm& pvm);

// Support-overlap witness: ‖Z_α Z_β‖ / (‖Z_α‖‖Z_β‖). The operators of one
// measurement carry unit total trace weight, so a norm below zero_tol means
// the outcome never occurs — empty support, orthogonal to everything — and
// the ratio (roundoff over roundoff) must not be evaluated.
inline constexpr double kVanishedOutcomeTol = 1e-12;
double normalized_overlap(const Matrix& za, const Matrix& zb,
                          double zero_tol = kVanishedOutcomeTol);

struct ZusVerdict {
  std::string pvm_name;
  bool pass = false;
  double worst_overlap = 0.0;
  std::pair<std::string, std::string> worst_pair;  // outcome labels
};

ZusVerdict is_zus(const LambdaMap& map, const Pvm& pvm);

struct CommonZusVerdict {
  bool pass = false;
  double worst_overlap = 0.0;
  std::vector<ZusVerdict> per_pvm;
};

CommonZusVerdict is_common_zus(const LambdaMap& map, const PvmFamily& family);

// Choi operator R_Λ = Σ_{ij} Λ(E_ij) ⊗ E_ij on H_B ⊗ H_A.
Matrix choi_operator(const LambdaMap& map);

Index kraus_rank(const LambdaMap& map);  // rank of the Choi operator

}  // namespace zuslab
