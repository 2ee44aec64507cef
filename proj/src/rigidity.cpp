#include "zuslab/rigidity.hpp"

#include <cmath>

namespace zuslab {

double purity(const BipartiteState& state) { return (state.rho * state.rho).trace().real(); }

Matrix reduced_a(const BipartiteState& state) {
  return partial_trace(state.rho, state.d_a, state.d_b, Subsystem::B);
}

Matrix reduced_b(const BipartiteState& state) {
  return partial_trace(state.rho, state.d_a, state.d_b, Subsystem::A);
}

double maximally_mixed_defect(const BipartiteState& state) {
  const Matrix id = Matrix::Identity(state.d_a, state.d_a);
  return opnorm(reduced_a(state) - id / static_cast<double>(state.d_a));
}

std::vector<double> schmidt_coefficients(const BipartiteState& state,
                                         const ToleranceConfig& tol) {
  const double p = purity(state);
  if (std::abs(p - 1.0) > kMaxEntangledTol)
    throw NotPure("schmidt_coefficients: purity " + std::to_string(p) +
                  " is not within tolerance of 1");
  // Extract the state vector as the top eigenvector, reshape to d_a × d_b;
  // the squared Schmidt coefficients are its squared singular values.
  Eigensystem es = hermitian_eig(state.rho, tol);
  Matrix reshaped = unvectorize(es.eigenvectors.col(0), state.d_a, state.d_b);
  Eigen::JacobiSVD<Matrix> svd(reshaped);
  const Index count = std::min(state.d_a, state.d_b);
  std::vector<double> out(count);
  for (Index k = 0; k < count; ++k) {
    const double s = svd.singularValues()(k);
    out[k] = s * s;
  }
  return out;
}

RigidityReport verify_rigidity(const BipartiteState& state, const PvmFamily& family,
                               const ToleranceConfig& tol) {
  LambdaMap map(state, tol);
  RigidityReport rep;

  rep.hypotheses.dims_equal = state.d_a == state.d_b;
  CommonZusVerdict zus = is_common_zus(map, family);
  rep.hypotheses.common_zus = zus.pass;
  rep.worst_overlap = zus.worst_overlap;

  std::vector<Matrix> generators;
  for (const Pvm& pvm : family.pvms)
    for (const Matrix& p : pvm.projections) generators.push_back(p);
  MatrixAlgebra alg = generate_algebra(generators, state.d_a, tol);
  rep.algebra_dim = alg.dim();
  rep.hypotheses.algebra_full = alg.dim() == state.d_a * state.d_a;

  rep.conclusions.purity = purity(state);
  rep.conclusions.kraus_rank = kraus_rank(map);
  rep.conclusions.rho_a_defect = maximally_mixed_defect(state);
  const bool pure = std::abs(rep.conclusions.purity - 1.0) <= kMaxEntangledTol;
  if (pure) rep.conclusions.schmidt = schmidt_coefficients(state, tol);
  rep.conclusions.is_max_entangled =
      pure && rep.conclusions.rho_a_defect <= kMaxEntangledTol;

  if (rep.hypotheses_hold()) {
    bool schmidt_uniform = pure && !rep.conclusions.schmidt.empty();
    if (schmidt_uniform) {
      const double target = 1.0 / static_cast<double>(std::min(state.d_a, state.d_b));
      for (double s : rep.conclusions.schmidt)
        schmidt_uniform = schmidt_uniform && std::abs(s - target) <= kMaxEntangledTol;
    }
    const bool conclusions_hold = pure && rep.conclusions.kraus_rank == 1 &&
                                  rep.conclusions.is_max_entangled && schmidt_uniform;
    rep.theorem_violation = !conclusions_hold;
  }
  return rep;
}

}  // namespace zuslab
