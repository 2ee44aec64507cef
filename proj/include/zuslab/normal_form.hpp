#pragma once

// The structure theory of a state that is zero-uncertainty for a whole
// algebra 𝒜: Φ restricted to 𝒜ᵀ is then a *-homomorphism into B(S) whose
// image commutes with ρ_B, and a unitary on S brings the pair (Λ|𝒜ᵀ, ρ_B)
// to the canonical shape ⊕_a (X_a ⊗ τ_a). The full-algebra specialization
// recovers a maximally entangled pair tensored with an ancilla state.

#include "zuslab/cp_maps.hpp"
#include "zuslab/star_algebra.hpp"

namespace zuslab {

struct NotAZus : Error {
  using Error::Error;
};

struct BlockStructureDefect : Error {
  using Error::Error;
};

// Φ evaluated on an orthonormal basis of 𝒜ᵀ, compressed to the support S
// of ρ_B (s × s coordinates).
struct RestrictedPhi {
  MatrixAlgebra algebra_t;     // 𝒜ᵀ
  std::vector<Matrix> values;  // Φ(basis element), compressed to S
  Matrix support_basis;        // d_b × s isometry
  Matrix rho_b_s;              // ρ_B in S coordinates

  Index support_dim() const { return support_basis.cols(); }
  Matrix apply(const Matrix& x_t) const;  // for x_t in span 𝒜ᵀ
};

RestrictedPhi restricted_phi(const LambdaMap& map, const MatrixAlgebra& alg,
                             const ToleranceConfig& tol = {});

// Quantitative 𝒜-ZUS test: Φ|𝒜ᵀ must be a unital *-homomorphism
// (hom_defect) whose image commutes with ρ_B (commutant_defect).
struct AZusReport {
  bool is_azus = false;
  double hom_defect = 0.0;
  double commutant_defect = 0.0;
};

AZusReport a_zus_check(const LambdaMap& map, const MatrixAlgebra& alg,
                       const ToleranceConfig& tol = {});

// Cross-check of the algebraic test against directly sampled PVMs in 𝒜.
struct EquivalenceReport {
  bool algebraic_verdict = false;
  bool sampled_verdict = false;
  double worst_overlap = 0.0;
  bool agree() const { return algebraic_verdict == sampled_verdict; }
};

EquivalenceReport sampled_zus_equivalence(const LambdaMap& map, const MatrixAlgebra& alg,
                                          int samples, std::uint64_t seed = kDefaultSeed,
                                          const ToleranceConfig& tol = {});

struct NormalFormBlock {
  Index algebra_block = 0;  // index into the 𝒜ᵀ Wedderburn structure
  Index n = 0;              // simple factor size
  Index k = 0;              // dim K_a = rank of τ_a's space
  Matrix tau;               // k × k, positive, Σ_a n_a Tr(τ_a) = 1
};

struct NormalForm {
  WedderburnStructure algebra_structure;  // of 𝒜ᵀ
  Matrix support_basis;                   // d_b × s
  Matrix transform;                       // unitary U on S: U Φ(x) U† = ⊕ (x_a ⊗ I)
  std::vector<NormalFormBlock> blocks;
  std::vector<Index> trivial_blocks;      // algebra blocks with Φ(z_a) = 0
  double block_structure_defect = 0.0;    // ‖U ρ_S U† − ⊕ (I ⊗ τ_a)‖
  double reconstruction_defect = 0.0;     // worst ‖U Λ(x) U† − ⊕ (x_a ⊗ τ_a)‖ over probes

  // ⊕_a (x_a ⊗ τ_a) assembled in the U coordinates for x in span 𝒜ᵀ.
  Matrix canonical_lambda(const Matrix& x_t) const;
};

NormalForm compute_normal_form(const LambdaMap& map, const MatrixAlgebra& alg,
                               const ToleranceConfig& tol = {},
                               std::uint64_t seed = kDefaultSeed);

// 𝒜 = M_d specialization: a co-isometry T on H_B with
// (I ⊗ T) ρ (I ⊗ T)† = |Φ_d⟩⟨Φ_d| ⊗ σ, σ = d · τ.
struct FullAlgebraForm {
  Matrix t;  // (d·k) × d_b, T T† = I
  Matrix sigma;
  double defect = 0.0;  // ‖(I⊗T) ρ (I⊗T)† − Φ_d ⊗ σ‖
};

FullAlgebraForm full_algebra_form(const LambdaMap& map, const ToleranceConfig& tol = {},
                                  std::uint64_t seed = kDefaultSeed);

}  // namespace zuslab
