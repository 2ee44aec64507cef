#pragma once

// Finite-dimensional *-algebras of matrices, represented by orthonormal
// Hilbert-Schmidt bases of their linear span. Provides the generated unital
// *-algebra, commutant and center (SVD nullspaces of commutation
// constraints), the block decomposition into simple summands M_n ⊗ I_m via
// seeded Hermitian probes, and the multiplicative domain of a unital CP map
// characterized by its bimodule identities.

#include "zuslab/rng.hpp"

#include <functional>
#include <optional>

namespace zuslab {

// Probes split degenerate eigenvalue clusters with this gap; genuinely
// random spectra clear it by many orders of magnitude.
inline constexpr double kProbeGap = 1e-6;
inline constexpr int kProbeRetries = 8;

struct DegenerateSplit : Error {
  using Error::Error;
};

struct NumericalRankAmbiguity : Error {
  using Error::Error;
};

struct VerificationFailed : Error {
  using Error::Error;
};

struct MatrixAlgebra {
  Index ambient_dim = 0;
  std::vector<Matrix> basis;  // HS-orthonormal spanning set
  bool contains_identity = false;

  Index dim() const { return static_cast<Index>(basis.size()); }
  bool contains(const Matrix& x, double tol) const;
  Matrix project(const Matrix& x) const;
};

// Wraps a basis (orthonormalizing it) and records whether I is in the span.
MatrixAlgebra make_algebra(Index ambient_dim, const std::vector<Matrix>& spanning,
                           const ToleranceConfig& tol = {});

// Smallest unital *-algebra containing the generators.
MatrixAlgebra generate_algebra(const std::vector<Matrix>& generators, Index d,
                               const ToleranceConfig& tol = {});

MatrixAlgebra full_algebra(Index d);  // all of M_d

// Element-wise transpose of the span (again a *-algebra).
MatrixAlgebra transpose_algebra(const MatrixAlgebra& alg);

// {Y : [Y, X] = 0 for all X in alg}, inside the ambient M_d.
MatrixAlgebra commutant(const MatrixAlgebra& alg, const ToleranceConfig& tol = {});

// alg ∩ alg′.
MatrixAlgebra center(const MatrixAlgebra& alg, const ToleranceConfig& tol = {});

// The minimal projections of the center, canonically ordered (rank
// descending, then lexicographically by their phase-fixed leading
// eigenvector). Throws DegenerateSplit if the probe cannot separate them.
std::vector<Matrix> minimal_central_projections(const MatrixAlgebra& alg,
                                                const ToleranceConfig& tol = {},
                                                std::uint64_t seed = kDefaultSeed);

struct WedderburnBlock {
  Index n = 0;  // simple factor size, block ≅ M_n ⊗ I_m
  Index m = 0;  // multiplicity
  Matrix central_projection;
};

struct WedderburnStructure {
  Index ambient_dim = 0;
  Matrix transform;  // unitary W with W X W† = ⊕_a (X_a ⊗ I_{m_a}) for X in the algebra
  std::vector<WedderburnBlock> blocks;

  Index block_count() const { return static_cast<Index>(blocks.size()); }
  Index block_offset(Index a) const;           // start of block a in the W basis
  Index block_size(Index a) const { return blocks[a].n * blocks[a].m; }

  // X_a extracted from W x W† by averaging over the multiplicity slots.
  Matrix block_entry(const Matrix& x, Index a) const;
  // W† (0 ⊕ ... ⊕ y ⊗ I_{m_a} ⊕ ... ⊕ 0) W for an n_a × n_a matrix y.
  Matrix embed_block(const Matrix& y, Index a) const;
  // Matrix unit embed_block(E_jk, a); a convenience used everywhere.
  Matrix unit(Index a, Index j, Index k) const;
};

// Distance of the algebra from its decomposed form: max over basis elements
// of ‖W B W† − ⊕(X_a ⊗ I_{m_a})‖.
double wedderburn_defect(const MatrixAlgebra& alg, const WedderburnStructure& ws);

WedderburnStructure wedderburn_decompose(const MatrixAlgebra& alg,
                                         const ToleranceConfig& tol = {},
                                         std::uint64_t seed = kDefaultSeed);

// Build the structure (and its algebra) directly from a block pattern,
// conjugated by the given unitary. Blocks are canonically re-sorted.
WedderburnStructure make_structure(const std::vector<std::pair<Index, Index>>& pattern,
                                   const Matrix& transform,
                                   const ToleranceConfig& tol = {});
MatrixAlgebra algebra_from_structure(const WedderburnStructure& ws,
                                     const ToleranceConfig& tol = {});

// A linear map on M_d recorded by its values on matrix units (row-major).
struct MatrixMap {
  Index d_in = 0;
  std::vector<Matrix> unit_values;  // value on E_ij at index i*d_in + j

  Matrix apply(const Matrix& x) const;
  static MatrixMap sample(Index d, const std::function<Matrix(const Matrix&)>& f);
};

// Membership in the multiplicative domain of a unital CP map:
// Φ(a)Φ(x) = Φ(ax) and Φ(x)Φ(a) = Φ(xa) for all x, tested on matrix units.
double md_defect(const MatrixMap& phi, const Matrix& a);
bool md_member(const MatrixMap& phi, const Matrix& a, const ToleranceConfig& tol = {});

// The multiplicative domain itself, via the nullspace of the bimodule
// identities; every basis element is re-verified with md_member and a
// failure throws VerificationFailed.
MatrixAlgebra md_algebra(const MatrixMap& phi, const ToleranceConfig& tol = {});

}  // namespace zuslab
