#pragma once

// Dense complex linear algebra shared by every module: tensor plumbing,
// spectral helpers with explicit tolerance policy, and Hilbert-Schmidt
// span utilities (orthonormalization / nullspaces) used to carve out
// operator subspaces.

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace zuslab {

using Cplx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using Index = Eigen::Index;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionError : Error {
  using Error::Error;
};

struct NotHermitianError : Error {
  using Error::Error;
};

struct NotPsdError : Error {
  using Error::Error;
};

// Shared tolerance policy. eq_tol: operator-norm equality checks;
// rank_tol: singular/eigenvalue cutoff for ranks, supports and spans;
// psd_tol: how negative an eigenvalue may be before PSD validation fails.
struct ToleranceConfig {
  double eq_tol = 1e-9;
  double rank_tol = 1e-9;
  double psd_tol = 1e-10;
};

inline const Cplx kI{0.0, 1.0};

// --- tensor / index plumbing --------------------------------------------
//
// Composite indices are row-major throughout: |i⟩_A ⊗ |k⟩_B sits at
// i*d_b + k. kron below is the convention-defining implementation.

Matrix kron(const Matrix& a, const Matrix& b);

enum class Subsystem { A, B };

// Tr_A or Tr_B of an operator on C^{d_a} ⊗ C^{d_b}.
Matrix partial_trace(const Matrix& m, Index d_a, Index d_b, Subsystem over);

// Unitary F with F(x ⊗ y) = y ⊗ x, mapping C^{d_a}⊗C^{d_b} to C^{d_b}⊗C^{d_a}.
Matrix swap_unitary(Index d_a, Index d_b);

// Permutation unitary for several tensor slots: slot i of the output is
// slot perm[i] of the input (dims are the input slot dimensions).
Matrix system_permutation(const std::vector<Index>& dims, const std::vector<int>& perm);

// --- spectral helpers ----------------------------------------------------

struct Eigensystem {
  RealVector eigenvalues;  // descending
  Matrix eigenvectors;     // columns, matching order
};

// Eigendecomposition of a Hermitian matrix; throws NotHermitianError if the
// input fails the Hermiticity check at eq_tol.
Eigensystem hermitian_eig(const Matrix& m, const ToleranceConfig& tol = {});

// Orthogonal projection onto the range of a PSD matrix (eigenvalues above
// rank_tol). Throws NotPsdError if an eigenvalue is below -psd_tol.
Matrix support_projection(const Matrix& m, const ToleranceConfig& tol = {});

// Isometry whose columns span the support of a PSD matrix.
Matrix support_isometry(const Matrix& m, const ToleranceConfig& tol = {});

// Spectral power of a PSD matrix on its support; eigenvalues at or below
// rank_tol are mapped to zero (so exponent -1/2 is the pseudo-inverse root).
Matrix psd_power(const Matrix& m, double exponent, const ToleranceConfig& tol = {});

double opnorm(const Matrix& m);  // largest singular value

bool is_hermitian(const Matrix& m, double tol);
double hermiticity_defect(const Matrix& m);  // ||m - m†|| (operator norm)

// --- Hilbert-Schmidt span utilities --------------------------------------

// Row-major vec: vec(m)[r*cols + c] = m(r,c). With this convention
// vec(AYB) = (A ⊗ Bᵀ) vec(Y) and v.dot(w) realizes Tr(A†B).
Vector vectorize(const Matrix& m);
Matrix unvectorize(const Vector& v, Index rows, Index cols);

Cplx hs_inner(const Matrix& a, const Matrix& b);  // Tr(a† b)
double hs_norm(const Matrix& a);

// Orthonormal (Hilbert-Schmidt) basis of span{mats}: stack as columns, SVD,
// keep left singular vectors with σ > rank_tol * max(1, σ_max).
std::vector<Matrix> orthonormalize_span(const std::vector<Matrix>& mats,
                                        Index rows, Index cols,
                                        const ToleranceConfig& tol = {});

// Orthonormal basis of ker(m) (columns of V for σ ≤ rank_tol * max(1, σ_max)).
Matrix nullspace(const Matrix& m, const ToleranceConfig& tol = {});

// Coefficients of x in an orthonormal basis, and the projection residual.
Vector span_coefficients(const std::vector<Matrix>& basis, const Matrix& x);
Matrix span_project(const std::vector<Matrix>& basis, const Matrix& x);
double span_distance(const std::vector<Matrix>& basis, const Matrix& x);

// In-place modified Gram-Schmidt on the columns (assumed near-orthonormal
// already; this is a cleanup pass, not a rank-revealing factorization).
void gram_schmidt_columns(Matrix& m);

}  // namespace zuslab
