#pragma once

// Families of states that are zero-uncertainty for every measurement inside
// a given *-algebra yet escape the rigidity conclusions: a proper subalgebra
// on matched spaces kills purity/maximal entanglement, and a full algebra
// with a larger memory side keeps purity optional while the conditional
// operators stay orthogonal. Also: sampling PVMs inside an algebra, and the
// two catalog examples on C²⊗C² memory.

#include "zuslab/cp_maps.hpp"
#include "zuslab/star_algebra.hpp"

namespace zuslab {

struct NotProper : Error {
  using Error::Error;
};

struct BadBlock : Error {
  using Error::Error;
};

struct InvalidSigma : Error {
  using Error::Error;
};

// A pure common zero-uncertainty state for a proper subalgebra: pick one
// block of the structure, a maximally entangled pair across its simple
// factor, and unit vectors u (A side) and v (B side) in the multiplicity
// space. Defaults take the first block and u = v = e_0.
struct ProperSubalgebraRecipe {
  WedderburnStructure structure;
  Index block = 0;
  Vector u;  // in C^{m_block}; empty means e_0
  Vector v;  // in C^{m_block}; empty means e_0
};

BipartiteState proper_subalgebra_zus(const ProperSubalgebraRecipe& recipe,
                                     const ToleranceConfig& tol = {});

// The closed form of Tr_B of that state (block-supported (1/n) I_n ⊗ uu†),
// for cross-checking against the computed reduction.
Matrix proper_subalgebra_rho_a(const ProperSubalgebraRecipe& recipe);

// The same closed form for the conditional operator of a projection E in
// the algebra: (1/n) (E_block)ᵀ ⊗ vv† on the chosen block of the B side.
Matrix proper_subalgebra_conditional(const ProperSubalgebraRecipe& recipe, const Matrix& e,
                                     const ToleranceConfig& tol = {});

// |Φ_d⟩⟨Φ_d| ⊗ σ with memory H_B = C^d ⊗ C^k: zero-uncertainty for all of
// M_d, mixed whenever σ is. σ must be a density matrix (InvalidSigma).
BipartiteState larger_memory_zus(Index d, const Matrix& sigma,
                                 const ToleranceConfig& tol = {});

// ρ₀ ⊗ ω on an enlarged memory: extends any zero-uncertainty state without
// touching its conditional-operator supports.
BipartiteState product_extension_zus(const BipartiteState& rho0, const Matrix& omega,
                                     const ToleranceConfig& tol = {});

// PVMs drawn inside the algebra described by a Wedderburn structure.
// variant 0 is the finest deterministic pattern (each simple-factor basis
// slot its own outcome), variant 1 the same pattern rotated by a Fourier
// unitary in each factor, and variants ≥ 2 are seeded random coarse-grained
// patterns with Haar-rotated factors — so degenerate projections occur.
Pvm sample_pvm_in_algebra(const WedderburnStructure& ws, int variant, std::uint64_t seed,
                          const ToleranceConfig& tol = {});
std::vector<Pvm> sample_pvms_in_algebra(const WedderburnStructure& ws, int count,
                                        std::uint64_t seed, const ToleranceConfig& tol = {});

// Catalog states on a two-qubit memory (H_B = C²⊗C², d_b = 4).
struct MemoryExample {
  BipartiteState state;
  MatrixAlgebra algebra;  // the algebra the state is zero-uncertainty for
};

// |Φ⁺⟩_{A₁B₁}⟨Φ⁺| ⊗ ω_{A₂B₂}, reordered to (A₁A₂|B₁B₂); the algebra is
// B(C²) ⊗ I on the A side and the conditional of E is ½ Eᵀ ⊗ Tr_{A₂}ω.
MemoryExample two_qubit_memory_product(const Matrix& omega, const ToleranceConfig& tol = {});
Matrix two_qubit_memory_product_conditional(const Matrix& e, const Matrix& omega);

// |Φ⁺⟩⟨Φ⁺| ⊗ σ with a one-qubit ancilla; full algebra M₂, conditional
// ½ Eᵀ ⊗ σ.
MemoryExample two_qubit_memory_ancilla(const Matrix& sigma, const ToleranceConfig& tol = {});
Matrix two_qubit_memory_ancilla_conditional(const Matrix& e, const Matrix& sigma);

}  // namespace zuslab
