#include "zuslab/normal_form.hpp"

#include "zuslab/constructions.hpp"

#include <cmath>

namespace zuslab {

Matrix RestrictedPhi::apply(const Matrix& x_t) const {
  const Vector c = span_coefficients(algebra_t.basis, x_t);
  Matrix out = Matrix::Zero(support_dim(), support_dim());
  for (Index k = 0; k < c.size(); ++k) out += c(k) * values[k];
  return out;
}

RestrictedPhi restricted_phi(const LambdaMap& map, const MatrixAlgebra& alg,
                             const ToleranceConfig& tol) {
  if (alg.ambient_dim != map.state().d_a)
    throw DimensionError("restricted_phi: algebra does not act on H_A");
  RestrictedPhi out;
  out.algebra_t = transpose_algebra(alg);
  out.support_basis = map.support_basis();
  out.rho_b_s = out.support_basis.adjoint() * map.rho_b() * out.support_basis;
  out.values.reserve(out.algebra_t.basis.size());
  for (const Matrix& b : out.algebra_t.basis)
    out.values.push_back(out.support_basis.adjoint() * map.apply_phi(b) * out.support_basis);
  (void)tol;
  return out;
}

AZusReport a_zus_check(const LambdaMap& map, const MatrixAlgebra& alg,
                       const ToleranceConfig& tol) {
  RestrictedPhi phi = restricted_phi(map, alg, tol);
  const Index s = phi.support_dim();
  const Index nb = static_cast<Index>(phi.algebra_t.basis.size());
  AZusReport rep;

  // Unitality: 𝒜 is unital, so Φ(I) must be I_S.
  rep.hom_defect = opnorm(phi.apply(Matrix::Identity(alg.ambient_dim, alg.ambient_dim)) -
                          Matrix::Identity(s, s));
  // *-compatibility and multiplicativity on the basis.
  for (Index i = 0; i < nb; ++i) {
    rep.hom_defect = std::max(
        rep.hom_defect, opnorm(phi.apply(phi.algebra_t.basis[i].adjoint().eval()) -
                               phi.values[i].adjoint()));
    for (Index j = 0; j < nb; ++j) {
      const Matrix prod = phi.algebra_t.basis[i] * phi.algebra_t.basis[j];
      rep.hom_defect =
          std::max(rep.hom_defect, opnorm(phi.apply(prod) - phi.values[i] * phi.values[j]));
    }
  }
  for (Index i = 0; i < nb; ++i)
    rep.commutant_defect = std::max(
        rep.commutant_defect, opnorm(phi.values[i] * phi.rho_b_s - phi.rho_b_s * phi.values[i]));

  rep.is_azus = rep.hom_defect <= tol.eq_tol && rep.commutant_defect <= tol.eq_tol;
  return rep;
}

EquivalenceReport sampled_zus_equivalence(const LambdaMap& map, const MatrixAlgebra& alg,
                                          int samples, std::uint64_t seed,
                                          const ToleranceConfig& tol) {
  EquivalenceReport rep;
  rep.algebraic_verdict = a_zus_check(map, alg, tol).is_azus;
  WedderburnStructure ws = wedderburn_decompose(alg, tol, seed);
  rep.sampled_verdict = true;
  for (int k = 0; k < samples; ++k) {
    Pvm pvm = sample_pvm_in_algebra(ws, k, seed, tol);
    ZusVerdict v = is_zus(map, pvm);
    rep.sampled_verdict = rep.sampled_verdict && v.pass;
    rep.worst_overlap = std::max(rep.worst_overlap, v.worst_overlap);
  }
  return rep;
}

Matrix NormalForm::canonical_lambda(const Matrix& x_t) const {
  const Index s = transform.rows();
  Matrix out = Matrix::Zero(s, s);
  Index off = 0;
  for (const NormalFormBlock& blk : blocks) {
    const Matrix x_a = algebra_structure.block_entry(x_t, blk.algebra_block);
    out.block(off, off, blk.n * blk.k, blk.n * blk.k) = kron(x_a, blk.tau);
    off += blk.n * blk.k;
  }
  return out;
}

NormalForm compute_normal_form(const LambdaMap& map, const MatrixAlgebra& alg,
                               const ToleranceConfig& tol, std::uint64_t seed) {
  AZusReport azus = a_zus_check(map, alg, tol);
  if (!azus.is_azus)
    throw NotAZus("compute_normal_form: the state is not zero-uncertainty for the algebra "
                  "(hom defect " + std::to_string(azus.hom_defect) + ", commutant defect " +
                  std::to_string(azus.commutant_defect) + ")");

  NormalForm nf;
  nf.support_basis = map.support_basis();
  const Index s = nf.support_basis.cols();
  const MatrixAlgebra alg_t = transpose_algebra(alg);
  nf.algebra_structure = wedderburn_decompose(alg_t, tol, seed);
  const WedderburnStructure& ws = nf.algebra_structure;

  const Matrix rho_s =
      nf.support_basis.adjoint() * map.rho_b() * nf.support_basis;
  auto phi_s = [&](const Matrix& x) {
    return (nf.support_basis.adjoint() * map.apply_phi(x) * nf.support_basis).eval();
  };

  // Step 1: per algebra block, Φ carries the matrix units g_jk of 𝒜ᵀ to a
  // representation on S; Q_a = Φ(z_a) is its support. The isometry columns
  // Φ(g_j0) w_t, with w_t a basis of range Φ(g_00), identify S_a with
  // C^{n_a} ⊗ K_a.
  std::vector<Matrix> slices;  // s × (n_a * k_a) per retained block
  for (Index a = 0; a < ws.block_count(); ++a) {
    const Index n = ws.blocks[a].n;
    std::vector<Matrix> pj0(n);
    for (Index j = 0; j < n; ++j) pj0[j] = phi_s(ws.unit(a, j, 0));

    const Matrix p00 = 0.5 * (pj0[0] + pj0[0].adjoint());  // ≈ a projection on S
    const Index k = static_cast<Index>(std::llround(p00.trace().real()));
    if (k == 0) {
      nf.trivial_blocks.push_back(a);
      continue;
    }
    Eigensystem es = hermitian_eig(p00, tol);
    Matrix w(s, k);
    Index found = 0;
    for (Index c = 0; c < es.eigenvalues.size() && found < k; ++c)
      if (es.eigenvalues(c) > 0.5) w.col(found++) = es.eigenvectors.col(c);
    if (found != k)
      throw NumericalRankAmbiguity("compute_normal_form: Φ(g_00) has ambiguous rank");

    Matrix slice(s, n * k);
    for (Index j = 0; j < n; ++j)
      for (Index t = 0; t < k; ++t) slice.col(j * k + t) = pj0[j] * w.col(t);
    slices.push_back(slice);

    NormalFormBlock blk;
    blk.algebra_block = a;
    blk.n = n;
    blk.k = k;
    nf.blocks.push_back(std::move(blk));
  }

  Index covered = 0;
  for (const NormalFormBlock& blk : nf.blocks) covered += blk.n * blk.k;
  if (covered != s)
    throw NumericalRankAmbiguity("compute_normal_form: blocks cover " + std::to_string(covered) +
                                 " of " + std::to_string(s) + " support dimensions");

  Matrix u(s, s);
  Index off = 0;
  for (const Matrix& slice : slices) {
    u.middleCols(off, slice.cols()) = slice;
    off += slice.cols();
  }
  gram_schmidt_columns(u);     // the columns are orthonormal up to the hom defect
  nf.transform = u.adjoint();  // rows are the block coordinates

  // Step 2: in these coordinates ρ_S must be ⊕ (I_n ⊗ τ_a); read τ_a off by
  // averaging the diagonal n-cells and report the residual.
  const Matrix rho_u = nf.transform * rho_s * nf.transform.adjoint();
  Matrix rho_canonical = Matrix::Zero(s, s);
  off = 0;
  for (NormalFormBlock& blk : nf.blocks) {
    Matrix tau = Matrix::Zero(blk.k, blk.k);
    for (Index j = 0; j < blk.n; ++j)
      tau += rho_u.block(off + j * blk.k, off + j * blk.k, blk.k, blk.k);
    blk.tau = tau / static_cast<double>(blk.n);
    rho_canonical.block(off, off, blk.n * blk.k, blk.n * blk.k) =
        kron(Matrix::Identity(blk.n, blk.n), blk.tau);
    off += blk.n * blk.k;
  }
  nf.block_structure_defect = opnorm(rho_u - rho_canonical);
  if (nf.block_structure_defect > tol.eq_tol)
    throw BlockStructureDefect("compute_normal_form: ρ_B deviates from the block form by " +
                               std::to_string(nf.block_structure_defect));

  // Step 3: verify Λ(x) ≅ ⊕ (x_a ⊗ τ_a) on random algebra elements.
  Prng rng = Prng::substream(seed, 0xf0f0ull);
  for (int probe = 0; probe < 8; ++probe) {
    Matrix x = Matrix::Zero(alg.ambient_dim, alg.ambient_dim);
    for (const Matrix& b : alg_t.basis) x += Cplx(rng.gaussian(), rng.gaussian()) * b;
    const Matrix lam =
        nf.support_basis.adjoint() * map.apply(x) * nf.support_basis;
    const double defect =
        opnorm(nf.transform * lam * nf.transform.adjoint() - nf.canonical_lambda(x));
    nf.reconstruction_defect = std::max(nf.reconstruction_defect, defect);
  }
  return nf;
}

FullAlgebraForm full_algebra_form(const LambdaMap& map, const ToleranceConfig& tol,
                                  std::uint64_t seed) {
  const Index d = map.state().d_a;
  NormalForm nf = compute_normal_form(map, full_algebra(d), tol, seed);
  if (nf.blocks.size() != 1 || nf.blocks.front().n != d)
    throw NumericalRankAmbiguity("full_algebra_form: unexpected block structure for M_d");

  FullAlgebraForm out;
  // The normal form carries Λ(x) to (W x W†) ⊗ τ, with W the probe gauge of
  // the M_d block; undoing W on the left is what makes (I ⊗ T) ρ (I ⊗ T)†
  // land on |Φ_d⟩⟨Φ_d| ⊗ σ itself rather than a local rotation of it.
  const Matrix& w = nf.algebra_structure.transform;
  const Index k = nf.blocks.front().k;
  out.t = kron(w.adjoint(), Matrix::Identity(k, k)) * nf.transform *
          nf.support_basis.adjoint();
  out.sigma = static_cast<double>(d) * nf.blocks.front().tau;  // Tr σ = d·Tr τ = 1

  const Matrix id_t = kron(Matrix::Identity(d, d), out.t);
  const Matrix moved = id_t * map.state().rho * id_t.adjoint();
  out.defect = opnorm(moved - kron(max_entangled_state(d).rho, out.sigma));
  return out;
}

}  // namespace zuslab
