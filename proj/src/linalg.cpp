#include "zuslab/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace zuslab {

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Matrix partial_trace(const Matrix& m, Index d_a, Index d_b, Subsystem over) {
  if (m.rows() != d_a * d_b || m.cols() != d_a * d_b)
    throw DimensionError("partial_trace: operator is " + std::to_string(m.rows()) + "x" +
                         std::to_string(m.cols()) + ", expected " + std::to_string(d_a * d_b) +
                         " = " + std::to_string(d_a) + "*" + std::to_string(d_b));
  if (over == Subsystem::A) {
    Matrix out = Matrix::Zero(d_b, d_b);
    for (Index i = 0; i < d_a; ++i)
      out += m.block(i * d_b, i * d_b, d_b, d_b);
    return out;
  }
  Matrix out = Matrix::Zero(d_a, d_a);
  for (Index i = 0; i < d_a; ++i)
    for (Index j = 0; j < d_a; ++j)
      out(i, j) = m.block(i * d_b, j * d_b, d_b, d_b).trace();
  return out;
}

Matrix swap_unitary(Index d_a, Index d_b) {
  Matrix f = Matrix::Zero(d_a * d_b, d_a * d_b);
  for (Index x = 0; x < d_a; ++x)
    for (Index y = 0; y < d_b; ++y)
      f(y * d_a + x, x * d_b + y) = 1.0;
  return f;
}

Matrix system_permutation(const std::vector<Index>& dims, const std::vector<int>& perm) {
  if (dims.size() != perm.size())
    throw DimensionError("system_permutation: dims and perm sizes differ");
  const int n = static_cast<int>(dims.size());
  Index total = 1;
  for (Index d : dims) total *= d;

  // Row-major strides of the input slots.
  std::vector<Index> stride(n, 1);
  for (int s = n - 2; s >= 0; --s) stride[s] = stride[s + 1] * dims[s + 1];

  Matrix p = Matrix::Zero(total, total);
  std::vector<Index> sub(n, 0);
  for (Index col = 0; col < total; ++col) {
    Index rem = col;
    for (int s = 0; s < n; ++s) {
      sub[s] = rem / stride[s];
      rem %= stride[s];
    }
    // Output slot i carries input slot perm[i]; build the row index with
    // the output's own row-major strides.
    Index row = 0;
    for (int i = 0; i < n; ++i) row = row * dims[perm[i]] + sub[perm[i]];
    p(row, col) = 1.0;
  }
  return p;
}

Eigensystem hermitian_eig(const Matrix& m, const ToleranceConfig& tol) {
  const double defect = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (defect > tol.eq_tol)
    throw NotHermitianError("hermitian_eig: Hermiticity defect " + std::to_string(defect));
  Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (m + m.adjoint()));
  if (es.info() != Eigen::Success)
    throw Error("hermitian_eig: eigensolver failed to converge");
  // Eigen returns ascending order; flip to descending.
  const Index n = m.rows();
  Eigensystem out;
  out.eigenvalues = es.eigenvalues().reverse();
  out.eigenvectors = Matrix(n, n);
  for (Index k = 0; k < n; ++k) out.eigenvectors.col(k) = es.eigenvectors().col(n - 1 - k);
  return out;
}

namespace {

Eigensystem psd_eig(const Matrix& m, const ToleranceConfig& tol, const char* who) {
  Eigensystem es = hermitian_eig(m, tol);
  if (es.eigenvalues.size() > 0 && es.eigenvalues.minCoeff() < -tol.psd_tol)
    throw NotPsdError(std::string(who) + ": eigenvalue " +
                      std::to_string(es.eigenvalues.minCoeff()) + " below -psd_tol");
  return es;
}

}  // namespace

Matrix support_projection(const Matrix& m, const ToleranceConfig& tol) {
  Matrix v = support_isometry(m, tol);
  return v * v.adjoint();
}

Matrix support_isometry(const Matrix& m, const ToleranceConfig& tol) {
  Eigensystem es = psd_eig(m, tol, "support_isometry");
  Index rank = 0;
  while (rank < es.eigenvalues.size() && es.eigenvalues(rank) > tol.rank_tol) ++rank;
  return es.eigenvectors.leftCols(rank);
}

Matrix psd_power(const Matrix& m, double exponent, const ToleranceConfig& tol) {
  Eigensystem es = psd_eig(m, tol, "psd_power");
  RealVector powered = RealVector::Zero(es.eigenvalues.size());
  for (Index k = 0; k < es.eigenvalues.size(); ++k)
    if (es.eigenvalues(k) > tol.rank_tol)
      powered(k) = std::pow(es.eigenvalues(k), exponent);
  return es.eigenvectors * powered.asDiagonal() * es.eigenvectors.adjoint();
}

double opnorm(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  return Eigen::JacobiSVD<Matrix>(m).singularValues()(0);
}

bool is_hermitian(const Matrix& m, double tol) {
  return m.rows() == m.cols() && (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

double hermiticity_defect(const Matrix& m) { return opnorm(m - m.adjoint()); }

Vector vectorize(const Matrix& m) {
  Vector v(m.size());
  Index k = 0;
  for (Index r = 0; r < m.rows(); ++r)
    for (Index c = 0; c < m.cols(); ++c) v(k++) = m(r, c);
  return v;
}

Matrix unvectorize(const Vector& v, Index rows, Index cols) {
  if (v.size() != rows * cols) throw DimensionError("unvectorize: size mismatch");
  Matrix m(rows, cols);
  Index k = 0;
  for (Index r = 0; r < rows; ++r)
    for (Index c = 0; c < cols; ++c) m(r, c) = v(k++);
  return m;
}

Cplx hs_inner(const Matrix& a, const Matrix& b) { return (a.adjoint() * b).trace(); }

double hs_norm(const Matrix& a) { return a.norm(); }

std::vector<Matrix> orthonormalize_span(const std::vector<Matrix>& mats, Index rows, Index cols,
                                        const ToleranceConfig& tol) {
  if (mats.empty()) return {};
  Matrix stacked(rows * cols, static_cast<Index>(mats.size()));
  for (size_t k = 0; k < mats.size(); ++k) {
    if (mats[k].rows() != rows || mats[k].cols() != cols)
      throw DimensionError("orthonormalize_span: inconsistent element shape");
    stacked.col(static_cast<Index>(k)) = vectorize(mats[k]);
  }
  Eigen::JacobiSVD<Matrix> svd(stacked, Eigen::ComputeThinU);
  const auto& sv = svd.singularValues();
  const double cutoff = tol.rank_tol * std::max(1.0, sv.size() > 0 ? sv(0) : 0.0);
  std::vector<Matrix> basis;
  for (Index k = 0; k < sv.size(); ++k)
    if (sv(k) > cutoff) basis.push_back(unvectorize(svd.matrixU().col(k), rows, cols));
  return basis;
}

Matrix nullspace(const Matrix& m, const ToleranceConfig& tol) {
  Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double cutoff = tol.rank_tol * std::max(1.0, sv.size() > 0 ? sv(0) : 0.0);
  Index rank = 0;
  while (rank < sv.size() && sv(rank) > cutoff) ++rank;
  return svd.matrixV().rightCols(m.cols() - rank);
}

Vector span_coefficients(const std::vector<Matrix>& basis, const Matrix& x) {
  Vector c(static_cast<Index>(basis.size()));
  for (size_t k = 0; k < basis.size(); ++k) c(static_cast<Index>(k)) = hs_inner(basis[k], x);
  return c;
}

Matrix span_project(const std::vector<Matrix>& basis, const Matrix& x) {
  Matrix p = Matrix::Zero(x.rows(), x.cols());
  for (const Matrix& b : basis) p += hs_inner(b, x) * b;
  return p;
}

double span_distance(const std::vector<Matrix>& basis, const Matrix& x) {
  return hs_norm(x - span_project(basis, x));
}

void gram_schmidt_columns(Matrix& m) {
  for (Index c = 0; c < m.cols(); ++c) {
    for (Index p = 0; p < c; ++p) m.col(c) -= m.col(p).dot(m.col(c)) * m.col(p);
    m.col(c).normalize();
  }
}

}  // namespace zuslab
