#include "zuslab/quantum.hpp"

#include <cmath>
#include <sstream>

namespace zuslab {

std::string ValidationReport::summary() const {
  if (ok()) return "ok";
  std::ostringstream os;
  for (size_t k = 0; k < violations.size(); ++k) {
    if (k) os << "; ";
    os << violations[k].kind << ": " << violations[k].detail << " (magnitude "
       << violations[k].magnitude << ")";
  }
  return os.str();
}

ValidationError::ValidationError(ValidationReport r)
    : Error("validation failed: " + r.summary()), report(std::move(r)) {}

ValidationReport check_state(const Matrix& rho, Index d_a, Index d_b,
                             const ToleranceConfig& tol) {
  ValidationReport rep;
  if (d_a < 1 || d_b < 1) {
    rep.violations.push_back({"dimension", "subsystem dimensions must be positive", 0.0});
    return rep;
  }
  if (rho.rows() != d_a * d_b || rho.cols() != d_a * d_b) {
    rep.violations.push_back(
        {"dimension",
         "rho is " + std::to_string(rho.rows()) + "x" + std::to_string(rho.cols()) +
             ", expected " + std::to_string(d_a * d_b) + " = " + std::to_string(d_a) + "*" +
             std::to_string(d_b),
         0.0});
    return rep;  // nothing else is meaningful with the wrong shape
  }
  const double herm = (rho - rho.adjoint()).cwiseAbs().maxCoeff();
  if (herm > tol.eq_tol)
    rep.violations.push_back({"hermiticity", "rho differs from its adjoint", herm});
  const double tr_defect = std::abs(rho.trace() - Cplx(1.0, 0.0));
  if (tr_defect > tol.eq_tol)
    rep.violations.push_back({"trace", "Tr(rho) differs from 1", tr_defect});
  if (herm <= tol.eq_tol) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (rho + rho.adjoint()),
                                             Eigen::EigenvaluesOnly);
    const double lo = es.eigenvalues().minCoeff();
    if (lo < -tol.psd_tol)
      rep.violations.push_back({"psd", "rho has a negative eigenvalue", -lo});
  }
  return rep;
}

BipartiteState validate_state(Matrix rho, Index d_a, Index d_b, const ToleranceConfig& tol) {
  ValidationReport rep = check_state(rho, d_a, d_b, tol);
  if (!rep.ok()) throw ValidationError(std::move(rep));
  return BipartiteState{std::move(rho), d_a, d_b};
}

ValidationReport check_pvm(const std::vector<Matrix>& projections, const ToleranceConfig& tol) {
  ValidationReport rep;
  if (projections.empty()) {
    rep.violations.push_back({"empty", "a PVM needs at least one outcome", 0.0});
    return rep;
  }
  const Index d = projections.front().rows();
  for (size_t a = 0; a < projections.size(); ++a) {
    const Matrix& p = projections[a];
    if (p.rows() != d || p.cols() != d) {
      rep.violations.push_back(
          {"dimension", "projection " + std::to_string(a) + " has inconsistent shape", 0.0});
      return rep;
    }
    const double herm = (p - p.adjoint()).cwiseAbs().maxCoeff();
    if (herm > tol.eq_tol)
      rep.violations.push_back(
          {"hermiticity", "projection " + std::to_string(a) + " is not Hermitian", herm});
    const double idem = opnorm(p * p - p);
    if (idem > tol.eq_tol)
      rep.violations.push_back(
          {"idempotence", "projection " + std::to_string(a) + " fails P^2 = P", idem});
  }
  for (size_t a = 0; a < projections.size(); ++a)
    for (size_t b = a + 1; b < projections.size(); ++b) {
      const double cross = opnorm(projections[a] * projections[b]);
      if (cross > tol.eq_tol)
        rep.violations.push_back({"orthogonality",
                                  "projections " + std::to_string(a) + " and " +
                                      std::to_string(b) + " overlap",
                                  cross});
    }
  Matrix sum = Matrix::Zero(d, d);
  for (const Matrix& p : projections) sum += p;
  const double comp = opnorm(sum - Matrix::Identity(d, d));
  if (comp > tol.eq_tol)
    rep.violations.push_back({"completeness", "projections do not sum to the identity", comp});
  return rep;
}

Pvm validate_pvm(std::vector<Matrix> projections, std::vector<std::string> labels,
                 std::string name, const ToleranceConfig& tol) {
  ValidationReport rep = check_pvm(projections, tol);
  if (!rep.ok()) throw ValidationError(std::move(rep));
  if (labels.empty())
    for (size_t a = 0; a < projections.size(); ++a) labels.push_back(std::to_string(a));
  if (labels.size() != projections.size())
    throw ValidationError(
        {{{"labels", "label count differs from outcome count", 0.0}}});
  return Pvm{std::move(projections), std::move(labels), std::move(name)};
}

ValidationReport check_family(const std::vector<Pvm>& pvms, const ToleranceConfig& tol) {
  ValidationReport rep;
  if (pvms.empty()) {
    rep.violations.push_back({"empty", "a family needs at least one PVM", 0.0});
    return rep;
  }
  const Index d = pvms.front().dim();
  for (size_t x = 0; x < pvms.size(); ++x) {
    if (pvms[x].dim() != d) {
      rep.violations.push_back(
          {"dimension", "PVM " + std::to_string(x) + " lives on a different space", 0.0});
      continue;
    }
    ValidationReport sub = check_pvm(pvms[x].projections, tol);
    for (Violation& v : sub.violations) {
      v.detail = "PVM " + (pvms[x].name.empty() ? std::to_string(x) : pvms[x].name) + ": " +
                 v.detail;
      rep.violations.push_back(std::move(v));
    }
  }
  return rep;
}

PvmFamily validate_family(std::vector<Pvm> pvms, const ToleranceConfig& tol) {
  ValidationReport rep = check_family(pvms, tol);
  if (!rep.ok()) throw ValidationError(std::move(rep));
  return PvmFamily{std::move(pvms)};
}

const Pvm* PvmFamily::find(const std::string& name) const {
  for (const Pvm& p : pvms)
    if (p.name == name) return &p;
  return nullptr;
}

Vector max_entangled_vector(Index d) {
  Vector v = Vector::Zero(d * d);
  const double amp = 1.0 / std::sqrt(static_cast<double>(d));
  for (Index j = 0; j < d; ++j) v(j * d + j) = amp;
  return v;
}

BipartiteState max_entangled_state(Index d) {
  Vector v = max_entangled_vector(d);
  return BipartiteState{v * v.adjoint(), d, d};
}

namespace catalog {

BipartiteState bell() { return max_entangled_state(2); }

BipartiteState mix() {
  Matrix rho = Matrix::Zero(4, 4);
  rho(0, 0) = 0.5;  // |00⟩⟨00|
  rho(3, 3) = 0.5;  // |11⟩⟨11|
  return BipartiteState{rho, 2, 2};
}

Pvm z_basis() {
  Matrix p0 = Matrix::Zero(2, 2), p1 = Matrix::Zero(2, 2);
  p0(0, 0) = 1.0;
  p1(1, 1) = 1.0;
  return Pvm{{p0, p1}, {"0", "1"}, "Z"};
}

Pvm x_basis() {
  Matrix plus(2, 2), minus(2, 2);
  plus << 0.5, 0.5, 0.5, 0.5;
  minus << 0.5, -0.5, -0.5, 0.5;
  return Pvm{{plus, minus}, {"+", "-"}, "X"};
}

PvmFamily s1() { return PvmFamily{{z_basis(), x_basis()}}; }

PvmFamily s2() { return PvmFamily{{z_basis()}}; }

BipartiteState qutrit_phi3() { return max_entangled_state(3); }

Pvm qutrit_p() {
  Matrix p0 = Matrix::Zero(3, 3), p1 = Matrix::Zero(3, 3);
  p0(0, 0) = 1.0;
  p0(1, 1) = 1.0;
  p1(2, 2) = 1.0;
  return Pvm{{p0, p1}, {"0", "1"}, "P"};
}

Pvm qutrit_q() {
  Vector v = Vector::Zero(3);
  v(1) = v(2) = 1.0 / std::sqrt(2.0);
  Matrix q1 = v * v.adjoint();
  Matrix q0 = Matrix::Identity(3, 3) - q1;
  return Pvm{{q0, q1}, {"0", "1"}, "Q"};
}

PvmFamily qutrit_family() { return PvmFamily{{qutrit_p(), qutrit_q()}}; }

}  // namespace catalog

}  // namespace zuslab
