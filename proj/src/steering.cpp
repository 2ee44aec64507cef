#include "zuslab/steering.hpp"

#include <algorithm>

namespace zuslab {

Assemblage make_assemblage(const BipartiteState& state, const PvmFamily& family,
                           const ToleranceConfig& tol) {
  LambdaMap map(state, tol);
  Assemblage out;
  out.rho_b = map.rho_b();
  out.d_b = state.d_b;
  for (const Pvm& pvm : family.pvms) {
    ConditionalOperators cond = conditional_operators(map, pvm);
    SteeringSetting setting;
    setting.label = pvm.name;
    setting.outcomes = cond.labels;
    setting.sigmas = std::move(cond.operators);
    out.settings.push_back(std::move(setting));
  }
  return out;
}

ValidationReport check_assemblage(const Assemblage& asm_, const ToleranceConfig& tol) {
  ValidationReport rep;
  for (const SteeringSetting& setting : asm_.settings) {
    Matrix total = Matrix::Zero(asm_.d_b, asm_.d_b);
    for (size_t a = 0; a < setting.sigmas.size(); ++a) {
      const Matrix& sig = setting.sigmas[a];
      const double herm = (sig - sig.adjoint()).cwiseAbs().maxCoeff();
      if (herm > tol.eq_tol)
        rep.violations.push_back({"hermiticity",
                                  "setting " + setting.label + " outcome " +
                                      setting.outcomes[a] + " is not Hermitian",
                                  herm});
      else {
        Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (sig + sig.adjoint()),
                                                 Eigen::EigenvaluesOnly);
        const double lo = es.eigenvalues().minCoeff();
        if (lo < -tol.psd_tol)
          rep.violations.push_back({"psd",
                                    "setting " + setting.label + " outcome " +
                                        setting.outcomes[a] + " has a negative eigenvalue",
                                    -lo});
      }
      total += sig;
    }
    const double ns = opnorm(total - asm_.rho_b);
    if (ns > tol.eq_tol)
      rep.violations.push_back(
          {"no-signalling", "setting " + setting.label + " does not sum to rho_B", ns});
  }
  return rep;
}

SteeringVerdict perfect_steering_check(const Assemblage& asm_, const ToleranceConfig& tol) {
  SteeringVerdict out;
  out.pass = true;
  for (const SteeringSetting& setting : asm_.settings) {
    SettingVerdict v;
    v.setting = setting.label;
    for (size_t a = 0; a < setting.sigmas.size(); ++a)
      for (size_t b = a + 1; b < setting.sigmas.size(); ++b) {
        const double overlap =
            normalized_overlap(setting.sigmas[a], setting.sigmas[b],
                               std::max(kVanishedOutcomeTol, tol.rank_tol));
        if (overlap > v.worst_overlap) {
          v.worst_overlap = overlap;
          v.worst_pair = {setting.outcomes[a], setting.outcomes[b]};
        }
      }
    v.pass = v.worst_overlap <= tol.eq_tol;
    out.pass = out.pass && v.pass;
    out.settings.push_back(std::move(v));
  }
  return out;
}

BobDecoder bob_decoder(const Assemblage& asm_, const std::string& setting_label,
                       const ToleranceConfig& tol) {
  const SteeringSetting* setting = nullptr;
  for (const SteeringSetting& s : asm_.settings)
    if (s.label == setting_label) setting = &s;
  if (!setting) throw Error("bob_decoder: no setting named '" + setting_label + "'");

  SteeringVerdict verdict = perfect_steering_check(asm_, tol);
  for (const SettingVerdict& v : verdict.settings)
    if (v.setting == setting_label && !v.pass)
      throw NotPerfect("bob_decoder: setting '" + setting_label +
                       "' is not perfectly steerable (overlap " +
                       std::to_string(v.worst_overlap) + ")");

  BobDecoder out;
  out.support_basis = support_isometry(asm_.rho_b, tol);
  const Index s = out.support_basis.cols();

  // supp σ_α ⊆ supp ρ_B, so compressing the support projections to S keeps
  // them projections and they stay pairwise orthogonal.
  std::vector<Matrix> projections;
  std::vector<std::string> labels;
  Matrix covered = Matrix::Zero(s, s);
  for (size_t a = 0; a < setting->sigmas.size(); ++a) {
    const Matrix q = out.support_basis.adjoint() *
                     support_projection(setting->sigmas[a], tol) * out.support_basis;
    covered += q;
    projections.push_back(q);
    labels.push_back(setting->outcomes[a]);
  }
  // Anything left of supp ρ_B that no outcome covers becomes a discard
  // outcome; when the supports already fill S there is nothing to discard.
  const Matrix leftover = Matrix::Identity(s, s) - covered;
  if (leftover.trace().real() > 0.5) {
    projections.push_back(leftover);
    labels.push_back("discard");
  }

  for (size_t a = 0; a < setting->sigmas.size(); ++a)
    for (size_t b = 0; b < setting->sigmas.size(); ++b) {
      if (a == b) continue;
      const Matrix sig_s =
          out.support_basis.adjoint() * setting->sigmas[b] * out.support_basis;
      out.decoding_defect =
          std::max(out.decoding_defect, std::abs((projections[a] * sig_s).trace()));
    }

  out.pvm = validate_pvm(std::move(projections), std::move(labels), setting_label + "-decoder",
                         tol);
  return out;
}

}  // namespace zuslab
