#include "zuslab/star_algebra.hpp"

#include <algorithm>
#include <cmath>

namespace zuslab {

namespace {

// Eigenvalue clusters of a descending spectrum, split at gaps > `gap`.
std::vector<std::pair<Index, Index>> cluster_ranges(const RealVector& vals, double gap) {
  std::vector<std::pair<Index, Index>> out;
  Index start = 0;
  for (Index k = 1; k <= vals.size(); ++k) {
    if (k == vals.size() || vals(k - 1) - vals(k) > gap) {
      out.push_back({start, k});
      start = k;
    }
  }
  return out;
}

// Random Hermitian element of the span (the span is *-closed, so splitting
// each element into Hermitian parts stays inside it).
Matrix hermitian_probe(const std::vector<Matrix>& basis, Index d, Prng& rng) {
  Matrix h = Matrix::Zero(d, d);
  for (const Matrix& b : basis) {
    h += rng.gaussian() * (b + b.adjoint());
    h += rng.gaussian() * (kI * (b - b.adjoint()));
  }
  return 0.5 * h;
}

// Canonical tie-break key: the first column of z with non-negligible norm,
// normalized and phase-fixed (an eigenvalue-1 eigenvector of z).
Vector leading_eigenvector(const Matrix& z) {
  for (Index c = 0; c < z.cols(); ++c) {
    if (z.col(c).norm() > 1e-6) {
      Vector v = z.col(c) / z.col(c).norm();
      for (Index k = 0; k < v.size(); ++k) {
        if (std::abs(v(k)) > 1e-6) {
          v *= std::conj(v(k)) / std::abs(v(k));
          break;
        }
      }
      return v;
    }
  }
  return Vector::Zero(z.rows());
}

// Descending lexicographic comparison with snapping, entrywise (re, im).
bool lex_before(const Vector& a, const Vector& b) {
  for (Index k = 0; k < a.size(); ++k) {
    const double dr = a(k).real() - b(k).real();
    if (std::abs(dr) > 1e-9) return dr > 0;
    const double di = a(k).imag() - b(k).imag();
    if (std::abs(di) > 1e-9) return di > 0;
  }
  return false;
}

}  // namespace

bool MatrixAlgebra::contains(const Matrix& x, double tol) const {
  if (x.rows() != ambient_dim || x.cols() != ambient_dim) return false;
  return span_distance(basis, x) <= tol * std::max(1.0, hs_norm(x));
}

Matrix MatrixAlgebra::project(const Matrix& x) const { return span_project(basis, x); }

MatrixAlgebra make_algebra(Index ambient_dim, const std::vector<Matrix>& spanning,
                           const ToleranceConfig& tol) {
  MatrixAlgebra alg;
  alg.ambient_dim = ambient_dim;
  alg.basis = orthonormalize_span(spanning, ambient_dim, ambient_dim, tol);
  alg.contains_identity =
      alg.contains(Matrix::Identity(ambient_dim, ambient_dim), tol.eq_tol);
  return alg;
}

MatrixAlgebra generate_algebra(const std::vector<Matrix>& generators, Index d,
                               const ToleranceConfig& tol) {
  std::vector<Matrix> seedset;
  seedset.push_back(Matrix::Identity(d, d));
  for (const Matrix& g : generators) {
    if (g.rows() != d || g.cols() != d)
      throw DimensionError("generate_algebra: generator has the wrong shape");
    seedset.push_back(g);
    seedset.push_back(g.adjoint());
  }
  std::vector<Matrix> basis = orthonormalize_span(seedset, d, d, tol);
  // Saturate under products; the dimension is strictly increasing until the
  // span is an algebra, so this ends within d*d rounds.
  for (Index round = 0; round <= d * d; ++round) {
    std::vector<Matrix> extended = basis;
    for (const Matrix& a : basis)
      for (const Matrix& b : basis) extended.push_back(a * b);
    std::vector<Matrix> next = orthonormalize_span(extended, d, d, tol);
    const bool stable = next.size() == basis.size();
    basis = std::move(next);
    if (stable) return make_algebra(d, basis, tol);
  }
  throw Error("generate_algebra: product saturation did not stabilize");
}

MatrixAlgebra full_algebra(Index d) {
  std::vector<Matrix> basis;
  basis.reserve(d * d);
  Matrix unit = Matrix::Zero(d, d);
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < d; ++j) {
      unit(i, j) = 1.0;
      basis.push_back(unit);
      unit(i, j) = 0.0;
    }
  MatrixAlgebra alg;
  alg.ambient_dim = d;
  alg.basis = std::move(basis);  // matrix units are already HS-orthonormal
  alg.contains_identity = true;
  return alg;
}

MatrixAlgebra transpose_algebra(const MatrixAlgebra& alg) {
  MatrixAlgebra out = alg;
  for (Matrix& b : out.basis) b = b.transpose().eval();
  return out;
}

MatrixAlgebra commutant(const MatrixAlgebra& alg, const ToleranceConfig& tol) {
  const Index d = alg.ambient_dim;
  const Index n = alg.dim();
  const Matrix id = Matrix::Identity(d, d);
  // vec(XY - YX) = (X ⊗ I - I ⊗ Xᵀ) vec(Y) in the row-major convention.
  Matrix constraints(n * d * d, d * d);
  for (Index k = 0; k < n; ++k)
    constraints.middleRows(k * d * d, d * d) =
        kron(alg.basis[k], id) - kron(id, alg.basis[k].transpose());
  Matrix ns = nullspace(constraints, tol);
  std::vector<Matrix> basis;
  basis.reserve(ns.cols());
  for (Index c = 0; c < ns.cols(); ++c) basis.push_back(unvectorize(ns.col(c), d, d));
  return make_algebra(d, basis, tol);
}

MatrixAlgebra center(const MatrixAlgebra& alg, const ToleranceConfig& tol) {
  const Index d = alg.ambient_dim;
  const Index n = alg.dim();
  // Solve for coefficient vectors c with [Σ_j c_j B_j, B_k] = 0 for all k.
  Matrix constraints(n * d * d, n);
  for (Index k = 0; k < n; ++k)
    for (Index j = 0; j < n; ++j)
      constraints.block(k * d * d, j, d * d, 1) =
          vectorize(alg.basis[k] * alg.basis[j] - alg.basis[j] * alg.basis[k]);
  Matrix ns = nullspace(constraints, tol);
  std::vector<Matrix> basis;
  basis.reserve(ns.cols());
  for (Index c = 0; c < ns.cols(); ++c) {
    Matrix y = Matrix::Zero(d, d);
    for (Index j = 0; j < n; ++j) y += ns(j, c) * alg.basis[j];
    basis.push_back(std::move(y));  // isometric in c, so still orthonormal
  }
  return make_algebra(d, basis, tol);
}

std::vector<Matrix> minimal_central_projections(const MatrixAlgebra& alg,
                                                const ToleranceConfig& tol,
                                                std::uint64_t seed) {
  const Index d = alg.ambient_dim;
  if (!alg.contains_identity)
    throw Error("minimal_central_projections: expected a unital algebra");
  MatrixAlgebra z = center(alg, tol);
  const Index r = z.dim();
  if (r == 1) return {Matrix::Identity(d, d)};

  for (int attempt = 0; attempt < kProbeRetries; ++attempt) {
    Prng rng = Prng::substream(seed, static_cast<std::uint64_t>(attempt));
    Matrix h = hermitian_probe(z.basis, d, rng);
    Eigensystem es = hermitian_eig(h, tol);
    auto clusters = cluster_ranges(es.eigenvalues, kProbeGap);
    if (static_cast<Index>(clusters.size()) != r) continue;

    std::vector<Matrix> projections;
    bool clean = true;
    for (auto [lo, hi] : clusters) {
      Matrix v = es.eigenvectors.middleCols(lo, hi - lo);
      Matrix p = v * v.adjoint();
      if (span_distance(z.basis, p) > 1e-6) {  // probe leaked outside the center
        clean = false;
        break;
      }
      projections.push_back(std::move(p));
    }
    if (!clean) continue;

    std::sort(projections.begin(), projections.end(), [](const Matrix& a, const Matrix& b) {
      const double ra = a.trace().real(), rb = b.trace().real();
      if (std::abs(ra - rb) > 0.5) return ra > rb;
      return lex_before(leading_eigenvector(a), leading_eigenvector(b));
    });
    return projections;
  }
  throw DegenerateSplit("minimal_central_projections: probe failed to split the center after " +
                        std::to_string(kProbeRetries) + " attempts");
}

Index WedderburnStructure::block_offset(Index a) const {
  Index off = 0;
  for (Index k = 0; k < a; ++k) off += block_size(k);
  return off;
}

Matrix WedderburnStructure::block_entry(const Matrix& x, Index a) const {
  const Index n = blocks[a].n, m = blocks[a].m;
  const Matrix y = transform * x * transform.adjoint();
  const Matrix sub = y.block(block_offset(a), block_offset(a), n * m, n * m);
  Matrix out = Matrix::Zero(n, n);
  for (Index p = 0; p < n; ++p)
    for (Index q = 0; q < n; ++q) {
      Cplx acc = 0.0;
      for (Index t = 0; t < m; ++t) acc += sub(p * m + t, q * m + t);
      out(p, q) = acc / static_cast<double>(m);
    }
  return out;
}

Matrix WedderburnStructure::embed_block(const Matrix& y, Index a) const {
  const Index n = blocks[a].n, m = blocks[a].m;
  if (y.rows() != n || y.cols() != n)
    throw DimensionError("embed_block: entry has the wrong shape for this block");
  Matrix full = Matrix::Zero(ambient_dim, ambient_dim);
  full.block(block_offset(a), block_offset(a), n * m, n * m) =
      kron(y, Matrix::Identity(m, m));
  return transform.adjoint() * full * transform;
}

Matrix WedderburnStructure::unit(Index a, Index j, Index k) const {
  Matrix e = Matrix::Zero(blocks[a].n, blocks[a].n);
  e(j, k) = 1.0;
  return embed_block(e, a);
}

double wedderburn_defect(const MatrixAlgebra& alg, const WedderburnStructure& ws) {
  double worst = 0.0;
  for (const Matrix& b : alg.basis) {
    Matrix rebuilt = Matrix::Zero(ws.ambient_dim, ws.ambient_dim);
    for (Index a = 0; a < ws.block_count(); ++a)
      rebuilt.block(ws.block_offset(a), ws.block_offset(a), ws.block_size(a),
                    ws.block_size(a)) =
          kron(ws.block_entry(b, a), Matrix::Identity(ws.blocks[a].m, ws.blocks[a].m));
    worst = std::max(worst, opnorm(ws.transform * b * ws.transform.adjoint() - rebuilt));
  }
  return worst;
}

namespace {

// Isometry onto an irreducible copy inside one block: for multiplicity m > 1
// probe the block commutant (≅ I_n ⊗ M_m); its generic Hermitian elements
// have m eigenvalue clusters of size n, and any one cluster spans an irrep.
Matrix irrep_isometry(const MatrixAlgebra& block_alg, Index n, Index m,
                      const ToleranceConfig& tol, std::uint64_t seed) {
  const Index k = block_alg.ambient_dim;
  if (m == 1) return Matrix::Identity(k, k);
  MatrixAlgebra comm = commutant(block_alg, tol);
  if (comm.dim() != m * m)
    throw NumericalRankAmbiguity("wedderburn: block commutant has dimension " +
                                 std::to_string(comm.dim()) + ", expected " +
                                 std::to_string(m * m));
  for (int attempt = 0; attempt < kProbeRetries; ++attempt) {
    Prng rng = Prng::substream(seed, 0x10000ull + static_cast<std::uint64_t>(attempt));
    Matrix h = hermitian_probe(comm.basis, k, rng);
    Eigensystem es = hermitian_eig(h, tol);
    auto clusters = cluster_ranges(es.eigenvalues, kProbeGap);
    if (static_cast<Index>(clusters.size()) != m) continue;
    bool sizes_ok = true;
    for (auto [lo, hi] : clusters) sizes_ok = sizes_ok && (hi - lo == n);
    if (!sizes_ok) continue;
    return es.eigenvectors.middleCols(clusters.front().first, n);
  }
  throw DegenerateSplit("wedderburn: block commutant probe failed to split");
}

struct BlockDraft {
  Index n = 0, m = 0;
  Matrix z;
  Matrix columns;  // ambient_dim × (n*m), the block's slice of W†
  Vector key;
};

}  // namespace

WedderburnStructure wedderburn_decompose(const MatrixAlgebra& alg, const ToleranceConfig& tol,
                                         std::uint64_t seed) {
  const Index d = alg.ambient_dim;
  std::vector<Matrix> zs = minimal_central_projections(alg, tol, seed);

  std::vector<BlockDraft> drafts;
  for (size_t zi = 0; zi < zs.size(); ++zi) {
    const Matrix& z = zs[zi];
    const Index k = static_cast<Index>(std::llround(z.trace().real()));
    Eigensystem es = hermitian_eig(z, tol);
    Matrix v = es.eigenvectors.leftCols(k);  // eigenvalue-1 eigenvectors

    // The compressed block algebra is a full matrix algebra with multiplicity:
    // dimension n², acting on k = n·m coordinates.
    std::vector<Matrix> compressed;
    compressed.reserve(alg.basis.size());
    for (const Matrix& b : alg.basis) compressed.push_back(v.adjoint() * b * v);
    MatrixAlgebra block_alg = make_algebra(k, compressed, tol);
    const Index n = static_cast<Index>(std::llround(std::sqrt(double(block_alg.dim()))));
    if (n * n != block_alg.dim())
      throw NumericalRankAmbiguity("wedderburn: compressed block dimension " +
                                   std::to_string(block_alg.dim()) +
                                   " is not a perfect square");
    if (k % n != 0)
      throw NumericalRankAmbiguity("wedderburn: block rank " + std::to_string(k) +
                                   " is not divisible by n = " + std::to_string(n));
    const Index m = k / n;

    Matrix e1 = irrep_isometry(block_alg, n, m, tol,
                               splitmix64(seed) + 0x5151ull * (zi + 1));

    // φ₁(X) = E₁† X E₁ is an isomorphism onto M_n; solve for the matrix
    // units g_{j0} = φ₁⁻¹(E_{j0}) in the block basis.
    Matrix coeff(n * n, n * n);
    for (Index c = 0; c < block_alg.dim(); ++c)
      coeff.col(c) = vectorize(e1.adjoint() * block_alg.basis[c] * e1);
    Eigen::FullPivLU<Matrix> lu(coeff);
    if (lu.rank() < n * n)
      throw NumericalRankAmbiguity("wedderburn: irrep compression is singular");

    Matrix g00;
    Matrix columns(k, n * m);
    std::vector<Matrix> gj0(n);
    for (Index j = 0; j < n; ++j) {
      Vector target = Vector::Zero(n * n);
      target(j * n + 0) = 1.0;  // vec(E_{j0})
      Vector beta = lu.solve(target);
      Matrix g = Matrix::Zero(k, k);
      for (Index c = 0; c < n * n; ++c) g += beta(c) * block_alg.basis[c];
      gj0[j] = std::move(g);
    }
    g00 = gj0[0];

    Eigensystem ge = hermitian_eig(0.5 * (g00 + g00.adjoint()), tol);
    Matrix w(k, m);
    Index found = 0;
    for (Index c = 0; c < ge.eigenvalues.size() && found < m; ++c)
      if (ge.eigenvalues(c) > 0.5) w.col(found++) = ge.eigenvectors.col(c);
    if (found != m)
      throw NumericalRankAmbiguity("wedderburn: range of g00 has unexpected rank");

    for (Index j = 0; j < n; ++j)
      for (Index t = 0; t < m; ++t) columns.col(j * m + t) = gj0[j] * w.col(t);
    gram_schmidt_columns(columns);

    BlockDraft draft;
    draft.n = n;
    draft.m = m;
    draft.z = z;
    draft.columns = v * columns;
    draft.key = leading_eigenvector(z);
    drafts.push_back(std::move(draft));
  }

  std::stable_sort(drafts.begin(), drafts.end(), [](const BlockDraft& a, const BlockDraft& b) {
    if (a.n != b.n) return a.n > b.n;
    if (a.m != b.m) return a.m > b.m;
    return lex_before(a.key, b.key);
  });

  WedderburnStructure ws;
  ws.ambient_dim = d;
  Matrix g(d, d);
  Index off = 0;
  for (const BlockDraft& draft : drafts) {
    g.middleCols(off, draft.n * draft.m) = draft.columns;
    off += draft.n * draft.m;
    ws.blocks.push_back({draft.n, draft.m, draft.z});
  }
  if (off != d)
    throw NumericalRankAmbiguity("wedderburn: blocks cover " + std::to_string(off) +
                                 " of " + std::to_string(d) + " dimensions");
  ws.transform = g.adjoint();
  return ws;
}

WedderburnStructure make_structure(const std::vector<std::pair<Index, Index>>& pattern,
                                   const Matrix& transform, const ToleranceConfig& tol) {
  Index total = 0;
  for (auto [n, m] : pattern) {
    if (n < 1 || m < 1) throw DimensionError("make_structure: block sizes must be positive");
    total += n * m;
  }
  if (transform.rows() != total || transform.cols() != total)
    throw DimensionError("make_structure: transform does not match the block pattern");
  if (opnorm(transform.adjoint() * transform - Matrix::Identity(total, total)) > tol.eq_tol)
    throw Error("make_structure: transform is not unitary");

  std::vector<std::pair<Index, Index>> sorted = pattern;
  std::stable_sort(sorted.begin(), sorted.end(), [](auto a, auto b) {
    if (a.first != b.first) return a.first > b.first;
    return a.second > b.second;
  });

  WedderburnStructure ws;
  ws.ambient_dim = total;
  ws.transform = transform;
  Index off = 0;
  for (auto [n, m] : sorted) {
    Matrix zd = Matrix::Zero(total, total);
    zd.block(off, off, n * m, n * m) = Matrix::Identity(n * m, n * m);
    ws.blocks.push_back({n, m, transform.adjoint() * zd * transform});
    off += n * m;
  }
  return ws;
}

MatrixAlgebra algebra_from_structure(const WedderburnStructure& ws,
                                     const ToleranceConfig& tol) {
  std::vector<Matrix> basis;
  for (Index a = 0; a < ws.block_count(); ++a)
    for (Index j = 0; j < ws.blocks[a].n; ++j)
      for (Index k = 0; k < ws.blocks[a].n; ++k) basis.push_back(ws.unit(a, j, k));
  return make_algebra(ws.ambient_dim, basis, tol);
}

Matrix MatrixMap::apply(const Matrix& x) const {
  if (x.rows() != d_in || x.cols() != d_in)
    throw DimensionError("MatrixMap::apply: argument has the wrong shape");
  Matrix out = Matrix::Zero(unit_values.front().rows(), unit_values.front().cols());
  for (Index i = 0; i < d_in; ++i)
    for (Index j = 0; j < d_in; ++j) out += x(i, j) * unit_values[i * d_in + j];
  return out;
}

MatrixMap MatrixMap::sample(Index d, const std::function<Matrix(const Matrix&)>& f) {
  MatrixMap map;
  map.d_in = d;
  map.unit_values.reserve(d * d);
  Matrix unit = Matrix::Zero(d, d);
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < d; ++j) {
      unit(i, j) = 1.0;
      map.unit_values.push_back(f(unit));
      unit(i, j) = 0.0;
    }
  return map;
}

double md_defect(const MatrixMap& phi, const Matrix& a) {
  const Index d = phi.d_in;
  const Matrix fa = phi.apply(a);
  double worst = 0.0;
  Matrix unit = Matrix::Zero(d, d);
  for (Index u = 0; u < d; ++u)
    for (Index v = 0; v < d; ++v) {
      unit(u, v) = 1.0;
      const Matrix& fuv = phi.unit_values[u * d + v];
      worst = std::max(worst, opnorm(phi.apply(a * unit) - fa * fuv));
      worst = std::max(worst, opnorm(phi.apply(unit * a) - fuv * fa));
      unit(u, v) = 0.0;
    }
  return worst;
}

bool md_member(const MatrixMap& phi, const Matrix& a, const ToleranceConfig& tol) {
  return md_defect(phi, a) <= tol.eq_tol * std::max(1.0, opnorm(a));
}

MatrixAlgebra md_algebra(const MatrixMap& phi, const ToleranceConfig& tol) {
  const Index d = phi.d_in;
  const Index s = phi.unit_values.front().rows();
  const Matrix id_s = Matrix::Identity(s, s);

  // Φ as a matrix on row-major vectorizations.
  Matrix phi_mat(s * s, d * d);
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < d; ++j) phi_mat.col(i * d + j) = vectorize(phi.unit_values[i * d + j]);

  // For each unit E_uv, two bimodule identities linear in a:
  //   Φ(a E_uv) = Φ(a) Φ(E_uv)   and   Φ(E_uv a) = Φ(E_uv) Φ(a).
  Matrix constraints(2 * d * d * s * s, d * d);
  Index row = 0;
  for (Index u = 0; u < d; ++u)
    for (Index v = 0; v < d; ++v) {
      const Matrix& fuv = phi.unit_values[u * d + v];
      Matrix left = Matrix::Zero(s * s, d * d);   // a ↦ Φ(a E_uv) = Σ_i a_iu Φ(E_iv)
      Matrix right = Matrix::Zero(s * s, d * d);  // a ↦ Φ(E_uv a) = Σ_j a_vj Φ(E_uj)
      for (Index i = 0; i < d; ++i) left.col(i * d + u) = vectorize(phi.unit_values[i * d + v]);
      for (Index j = 0; j < d; ++j) right.col(v * d + j) = vectorize(phi.unit_values[u * d + j]);
      constraints.middleRows(row, s * s) = left - kron(id_s, fuv.transpose()) * phi_mat;
      row += s * s;
      constraints.middleRows(row, s * s) = right - kron(fuv, id_s) * phi_mat;
      row += s * s;
    }

  Matrix ns = nullspace(constraints, tol);
  std::vector<Matrix> basis;
  basis.reserve(ns.cols());
  for (Index c = 0; c < ns.cols(); ++c) basis.push_back(unvectorize(ns.col(c), d, d));
  MatrixAlgebra alg = make_algebra(d, basis, tol);
  for (const Matrix& b : alg.basis)
    if (!md_member(phi, b, tol))
      throw VerificationFailed("md_algebra: a solved basis element fails the membership check "
                               "(defect " + std::to_string(md_defect(phi, b)) + ")");
  return alg;
}

}  // namespace zuslab
