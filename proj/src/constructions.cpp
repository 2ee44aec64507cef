#include "zuslab/constructions.hpp"

#include <cmath>
#include <numbers>

namespace zuslab {

namespace {

Vector multiplicity_vector(const Vector& given, Index m, const char* who) {
  if (given.size() == 0) {
    Vector e0 = Vector::Zero(m);
    e0(0) = 1.0;
    return e0;
  }
  if (given.size() != m)
    throw DimensionError(std::string(who) + ": multiplicity vector has size " +
                         std::to_string(given.size()) + ", expected " + std::to_string(m));
  const double norm = given.norm();
  if (norm < 1e-12) throw Error(std::string(who) + ": multiplicity vector is zero");
  return given / norm;
}

void require_density(const Matrix& m, const char* who) {
  ValidationReport rep;
  if (m.rows() != m.cols() || m.rows() < 1) {
    throw InvalidSigma(std::string(who) + ": expected a square density matrix");
  }
  rep = check_state(m, 1, m.rows(), {});
  if (!rep.ok()) throw InvalidSigma(std::string(who) + ": " + rep.summary());
}

Matrix fourier_unitary(Index n) {
  Matrix f(n, n);
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  for (Index j = 0; j < n; ++j)
    for (Index k = 0; k < n; ++k) {
      const double angle = 2.0 * std::numbers::pi * static_cast<double>(j * k) /
                           static_cast<double>(n);
      f(j, k) = scale * Cplx(std::cos(angle), std::sin(angle));
    }
  return f;
}

}  // namespace

BipartiteState proper_subalgebra_zus(const ProperSubalgebraRecipe& recipe,
                                     const ToleranceConfig& tol) {
  const WedderburnStructure& ws = recipe.structure;
  const Index d = ws.ambient_dim;
  if (recipe.block < 0 || recipe.block >= ws.block_count())
    throw BadBlock("proper_subalgebra_zus: block index " + std::to_string(recipe.block) +
                   " out of range");
  if (ws.block_count() == 1 && ws.blocks[0].m == 1)
    throw NotProper("proper_subalgebra_zus: the structure describes the full matrix algebra");

  const Index n = ws.blocks[recipe.block].n;
  const Index m = ws.blocks[recipe.block].m;
  const Index off = ws.block_offset(recipe.block);
  const Vector u = multiplicity_vector(recipe.u, m, "proper_subalgebra_zus");
  const Vector v = multiplicity_vector(recipe.v, m, "proper_subalgebra_zus");

  // In the decomposed basis the vector is (1/√n) Σ_j (e_j ⊗ u) ⊗ (e_j ⊗ v)
  // on the chosen block; as a d × d coefficient matrix that is a block of
  // (1/√n) Σ_j (e_j ⊗ u)(e_j ⊗ v)ᵀ. Transport with vec(U M Uᵀ*) semantics:
  // ψ = (W† ⊗ W†) ψ_dec ⇔ M = W† M_dec (W†)ᵀ.
  Matrix m_dec = Matrix::Zero(d, d);
  const double amp = 1.0 / std::sqrt(static_cast<double>(n));
  for (Index j = 0; j < n; ++j)
    for (Index s = 0; s < m; ++s)
      for (Index t = 0; t < m; ++t)
        m_dec(off + j * m + s, off + j * m + t) = amp * u(s) * v(t);
  const Matrix w_dag = ws.transform.adjoint();
  const Matrix coeff = w_dag * m_dec * w_dag.transpose();
  const Vector psi = vectorize(coeff);
  return validate_state(psi * psi.adjoint(), d, d, tol);
}

Matrix proper_subalgebra_rho_a(const ProperSubalgebraRecipe& recipe) {
  const WedderburnStructure& ws = recipe.structure;
  const Index d = ws.ambient_dim;
  const Index n = ws.blocks[recipe.block].n;
  const Index m = ws.blocks[recipe.block].m;
  const Vector u = multiplicity_vector(recipe.u, m, "proper_subalgebra_rho_a");
  Matrix dec = Matrix::Zero(d, d);
  dec.block(ws.block_offset(recipe.block), ws.block_offset(recipe.block), n * m, n * m) =
      kron(Matrix::Identity(n, n), u * u.adjoint()) / static_cast<double>(n);
  return ws.transform.adjoint() * dec * ws.transform;
}

Matrix proper_subalgebra_conditional(const ProperSubalgebraRecipe& recipe, const Matrix& e,
                                     const ToleranceConfig& tol) {
  const WedderburnStructure& ws = recipe.structure;
  const Index d = ws.ambient_dim;
  const Index n = ws.blocks[recipe.block].n;
  const Index m = ws.blocks[recipe.block].m;
  const Vector v = multiplicity_vector(recipe.v, m, "proper_subalgebra_conditional");
  const Matrix e_block = ws.block_entry(e, recipe.block);
  (void)tol;
  Matrix dec = Matrix::Zero(d, d);
  dec.block(ws.block_offset(recipe.block), ws.block_offset(recipe.block), n * m, n * m) =
      kron(e_block.transpose(), v * v.adjoint()) / static_cast<double>(n);
  return ws.transform.adjoint() * dec * ws.transform;
}

BipartiteState larger_memory_zus(Index d, const Matrix& sigma, const ToleranceConfig& tol) {
  if (d < 1) throw DimensionError("larger_memory_zus: d must be positive");
  require_density(sigma, "larger_memory_zus: sigma");
  const BipartiteState me = max_entangled_state(d);
  return validate_state(kron(me.rho, sigma), d, d * sigma.rows(), tol);
}

BipartiteState product_extension_zus(const BipartiteState& rho0, const Matrix& omega,
                                     const ToleranceConfig& tol) {
  require_density(omega, "product_extension_zus: omega");
  return validate_state(kron(rho0.rho, omega), rho0.d_a, rho0.d_b * omega.rows(), tol);
}

Pvm sample_pvm_in_algebra(const WedderburnStructure& ws, int variant, std::uint64_t seed,
                          const ToleranceConfig& tol) {
  const Index d = ws.ambient_dim;
  const Index r = ws.block_count();

  // One slot per simple-factor basis direction across all blocks.
  std::vector<std::pair<Index, Index>> slots;  // (block, index within factor)
  for (Index a = 0; a < r; ++a)
    for (Index j = 0; j < ws.blocks[a].n; ++j) slots.push_back({a, j});
  const Index total = static_cast<Index>(slots.size());

  std::vector<Index> assignment(total);  // slot -> outcome
  std::vector<Matrix> rotations(r);
  Index outcomes;

  if (variant == 0 || variant == 1) {
    outcomes = total;
    for (Index s = 0; s < total; ++s) assignment[s] = s;
    for (Index a = 0; a < r; ++a)
      rotations[a] = variant == 0 ? Matrix::Identity(ws.blocks[a].n, ws.blocks[a].n)
                                  : fourier_unitary(ws.blocks[a].n);
  } else {
    Prng rng = Prng::substream(seed, static_cast<std::uint64_t>(variant));
    outcomes = total >= 2 ? 2 + static_cast<Index>(rng.integer(total - 1)) : 1;
    std::vector<Index> order(total);
    for (Index s = 0; s < total; ++s) order[s] = s;
    for (Index s = total - 1; s > 0; --s)
      std::swap(order[s], order[rng.integer(static_cast<std::uint64_t>(s + 1))]);
    // Deal one slot to each outcome first so none comes out empty, then
    // scatter the rest: coarse-grained (degenerate) patterns are generic.
    for (Index k = 0; k < total; ++k)
      assignment[order[k]] =
          k < outcomes ? k : static_cast<Index>(rng.integer(static_cast<std::uint64_t>(outcomes)));
    for (Index a = 0; a < r; ++a) rotations[a] = haar_unitary(ws.blocks[a].n, rng);
  }

  std::vector<Matrix> projections(outcomes, Matrix::Zero(d, d));
  for (Index alpha = 0; alpha < outcomes; ++alpha) {
    for (Index a = 0; a < r; ++a) {
      const Index n = ws.blocks[a].n;
      Matrix pattern = Matrix::Zero(n, n);
      for (Index s = 0; s < total; ++s)
        if (slots[s].first == a && assignment[s] == alpha) pattern(slots[s].second, slots[s].second) = 1.0;
      if (pattern.isZero(0)) continue;
      projections[alpha] += ws.embed_block(rotations[a] * pattern * rotations[a].adjoint(), a);
    }
  }
  return validate_pvm(std::move(projections), {}, "sampled-" + std::to_string(variant), tol);
}

std::vector<Pvm> sample_pvms_in_algebra(const WedderburnStructure& ws, int count,
                                        std::uint64_t seed, const ToleranceConfig& tol) {
  std::vector<Pvm> out;
  out.reserve(count);
  for (int k = 0; k < count; ++k) out.push_back(sample_pvm_in_algebra(ws, k, seed, tol));
  return out;
}

MemoryExample two_qubit_memory_product(const Matrix& omega, const ToleranceConfig& tol) {
  if (omega.rows() != 4 || omega.cols() != 4)
    throw InvalidSigma("two_qubit_memory_product: omega must be 4x4");
  require_density(omega, "two_qubit_memory_product: omega");

  const BipartiteState pair = max_entangled_state(2);      // slots (A1, B1)
  const Matrix big = kron(pair.rho, omega);                // slots (A1, B1, A2, B2)
  const Matrix p = system_permutation({2, 2, 2, 2}, {0, 2, 1, 3});
  MemoryExample ex;
  ex.state = validate_state(p * big * p.adjoint(), 4, 4, tol);

  const Matrix id2 = Matrix::Identity(2, 2);
  std::vector<Matrix> basis;
  Matrix unit = Matrix::Zero(2, 2);
  for (Index i = 0; i < 2; ++i)
    for (Index j = 0; j < 2; ++j) {
      unit(i, j) = 1.0;
      basis.push_back(kron(unit, id2));
      unit(i, j) = 0.0;
    }
  ex.algebra = make_algebra(4, basis, tol);
  return ex;
}

Matrix two_qubit_memory_product_conditional(const Matrix& e, const Matrix& omega) {
  const Matrix tau = partial_trace(omega, 2, 2, Subsystem::A);
  return 0.5 * kron(e.transpose(), tau);
}

MemoryExample two_qubit_memory_ancilla(const Matrix& sigma, const ToleranceConfig& tol) {
  if (sigma.rows() != 2 || sigma.cols() != 2)
    throw InvalidSigma("two_qubit_memory_ancilla: sigma must be 2x2");
  MemoryExample ex;
  ex.state = larger_memory_zus(2, sigma, tol);
  ex.algebra = full_algebra(2);
  return ex;
}

Matrix two_qubit_memory_ancilla_conditional(const Matrix& e, const Matrix& sigma) {
  return 0.5 * kron(e.transpose(), sigma);
}

}  // namespace zuslab
