#include "zuslab/cp_maps.hpp"

#include <algorithm>

namespace zuslab {

LambdaMap::LambdaMap(BipartiteState state, ToleranceConfig tol)
    : state_(std::move(state)), tol_(tol) {
  ValidationReport rep = check_state(state_.rho, state_.d_a, state_.d_b, tol_);
  if (!rep.ok()) throw ValidationError(std::move(rep));
  rho_b_ = partial_trace(state_.rho, state_.d_a, state_.d_b, Subsystem::A);
  support_iso_ = support_isometry(rho_b_, tol_);
  support_proj_ = support_iso_ * support_iso_.adjoint();
  rho_b_inv_sqrt_ = psd_power(rho_b_, -0.5, tol_);
}

Matrix LambdaMap::apply(const Matrix& x) const {
  if (x.rows() != state_.d_a || x.cols() != state_.d_a)
    throw DimensionError("LambdaMap::apply: argument must act on H_A");
  const Matrix lifted = kron(x.transpose(), Matrix::Identity(state_.d_b, state_.d_b));
  return partial_trace(lifted * state_.rho, state_.d_a, state_.d_b, Subsystem::A);
}

Matrix LambdaMap::apply_phi(const Matrix& x) const {
  return rho_b_inv_sqrt_ * apply(x) * rho_b_inv_sqrt_;
}

ConditionalOperators conditional_operators(const LambdaMap& map, const Pvm& pvm) {
  if (pvm.dim() != map.state().d_a)
    throw DimensionError("conditional_operators: PVM does not act on H_A");
  ConditionalOperators out;
  out.pvm_name = pvm.name;
  out.labels = pvm.labels;
  out.operators.reserve(pvm.size());
  for (const Matrix& p : pvm.projections) out.operators.push_back(map.apply(p.transpose()));
  return out;
}

double normalized_overlap(const Matrix& za, const Matrix& zb, double zero_tol) {
  const double na = opnorm(za), nb = opnorm(zb);
  if (na <= zero_tol || nb <= zero_tol) return 0.0;
  return opnorm(za * zb) / (na * nb);
}

ZusVerdict is_zus(const LambdaMap& map, const Pvm& pvm) {
  ConditionalOperators cond = conditional_operators(map, pvm);
  ZusVerdict v;
  v.pvm_name = pvm.name;
  v.pass = true;
  for (size_t a = 0; a < cond.operators.size(); ++a)
    for (size_t b = a + 1; b < cond.operators.size(); ++b) {
      const double overlap = normalized_overlap(cond.operators[a], cond.operators[b],
                                                std::max(kVanishedOutcomeTol,
                                                         map.tolerances().rank_tol));
      if (overlap > v.worst_overlap) {
        v.worst_overlap = overlap;
        v.worst_pair = {cond.labels[a], cond.labels[b]};
      }
    }
  v.pass = v.worst_overlap <= map.tolerances().eq_tol;
  return v;
}

CommonZusVerdict is_common_zus(const LambdaMap& map, const PvmFamily& family) {
  CommonZusVerdict out;
  out.pass = true;
  for (const Pvm& pvm : family.pvms) {
    ZusVerdict v = is_zus(map, pvm);
    out.pass = out.pass && v.pass;
    out.worst_overlap = std::max(out.worst_overlap, v.worst_overlap);
    out.per_pvm.push_back(std::move(v));
  }
  return out;
}

Matrix choi_operator(const LambdaMap& map) {
  const Index d_a = map.state().d_a, d_b = map.state().d_b;
  Matrix choi = Matrix::Zero(d_b * d_a, d_b * d_a);
  Matrix unit = Matrix::Zero(d_a, d_a);
  for (Index i = 0; i < d_a; ++i)
    for (Index j = 0; j < d_a; ++j) {
      unit(i, j) = 1.0;
      choi += kron(map.apply(unit), unit);
      unit(i, j) = 0.0;
    }
  return choi;
}

Index kraus_rank(const LambdaMap& map) {
  Eigen::JacobiSVD<Matrix> svd(choi_operator(map));
  const auto& sv = svd.singularValues();
  const double cutoff = map.tolerances().rank_tol * std::max(1.0, sv.size() > 0 ? sv(0) : 0.0);
  Index rank = 0;
  while (rank < sv.size() && sv(rank) > cutoff) ++rank;
  return rank;
}

}  // namespace zuslab
