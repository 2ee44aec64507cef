#include "zuslab/linalg.hpp"
#include "zuslab/rng.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace zuslab;

namespace {

// Hand-rolled case generator: deterministic, covers rectangular shapes.
Matrix test_matrix(Index rows, Index cols, std::uint64_t salt) {
  Prng rng = Prng::substream(kDefaultSeed, salt);
  return ginibre(rows, cols, rng);
}

}  // namespace

TEST_CASE("kron matches the raw index-arithmetic reference") {
  for (std::uint64_t salt = 0; salt < 6; ++salt) {
    const Matrix a = test_matrix(2 + salt % 3, 2 + (salt + 1) % 3, salt);
    const Matrix b = test_matrix(2 + (salt + 2) % 3, 2 + salt % 2, salt + 100);
    CHECK(oracle::max_abs_diff(kron(a, b), oracle::kron_ref(a, b)) < 1e-14);
  }
}

TEST_CASE("kron mixed-product identity") {
  for (std::uint64_t salt = 0; salt < 4; ++salt) {
    const Matrix a = test_matrix(3, 2, salt), c = test_matrix(2, 3, salt + 10);
    const Matrix b = test_matrix(2, 4, salt + 20), d = test_matrix(4, 2, salt + 30);
    CHECK(opnorm(kron(a, b) * kron(c, d) - kron(a * c, b * d)) < 1e-12);
  }
}

TEST_CASE("partial traces agree with the summation reference") {
  for (std::uint64_t salt = 0; salt < 5; ++salt) {
    const Index d_a = 2 + salt % 3, d_b = 2 + (salt + 1) % 2;
    const Matrix m = test_matrix(d_a * d_b, d_a * d_b, salt);
    CHECK(oracle::max_abs_diff(partial_trace(m, d_a, d_b, Subsystem::A),
                               oracle::trace_out_a(m, d_a, d_b)) < 1e-13);
    CHECK(oracle::max_abs_diff(partial_trace(m, d_a, d_b, Subsystem::B),
                               oracle::trace_out_b(m, d_a, d_b)) < 1e-13);
    // trace is preserved either way
    CHECK(std::abs(partial_trace(m, d_a, d_b, Subsystem::A).trace() - m.trace()) < 1e-12);
  }
}

TEST_CASE("partial trace of a tensor product factors") {
  const Matrix a = test_matrix(3, 3, 1), b = test_matrix(2, 2, 2);
  const Matrix ab = kron(a, b);
  CHECK(opnorm(partial_trace(ab, 3, 2, Subsystem::A) - a.trace() * b) < 1e-12);
  CHECK(opnorm(partial_trace(ab, 3, 2, Subsystem::B) - b.trace() * a) < 1e-12);
}

TEST_CASE("swap unitary exchanges tensor factors") {
  const Matrix f = swap_unitary(2, 3);
  CHECK(opnorm(f * f.adjoint() - Matrix::Identity(6, 6)) < 1e-14);
  Prng rng = Prng::substream(kDefaultSeed, 7);
  const Vector x = random_unit_vector(2, rng), y = random_unit_vector(3, rng);
  const Vector xy = kron(x, y), yx = kron(y, x);
  CHECK((f * xy - yx).norm() < 1e-14);
}

TEST_CASE("system permutation reorders slots") {
  // Three slots of dims (2, 3, 2); output slot i takes input slot perm[i].
  const std::vector<Index> dims{2, 3, 2};
  const std::vector<int> perm{2, 0, 1};
  const Matrix p = system_permutation(dims, perm);
  Prng rng = Prng::substream(kDefaultSeed, 8);
  const Vector v0 = random_unit_vector(2, rng), v1 = random_unit_vector(3, rng),
               v2 = random_unit_vector(2, rng);
  const Vector in = kron(kron(v0, v1), v2);
  const Vector expect = kron(kron(v2, v0), v1);
  CHECK((p * in - expect).norm() < 1e-14);

  // inverse permutation undoes it
  const Matrix q = system_permutation({2, 2, 3}, {1, 2, 0});
  CHECK(opnorm(q * p - Matrix::Identity(12, 12)) < 1e-14);
}

TEST_CASE("row-major vec identity vec(AYB) = (A ⊗ Bᵀ) vec(Y)") {
  for (std::uint64_t salt = 0; salt < 4; ++salt) {
    const Matrix a = test_matrix(3, 2, salt), y = test_matrix(2, 4, salt + 5),
                 b = test_matrix(4, 3, salt + 9);
    const Vector lhs = vectorize(a * y * b);
    const Vector rhs = kron(a, b.transpose()) * vectorize(y);
    CHECK((lhs - rhs).norm() < 1e-12);
  }
}

TEST_CASE("vectorize/unvectorize round trip and HS inner product") {
  const Matrix m = test_matrix(3, 4, 11);
  CHECK(oracle::max_abs_diff(unvectorize(vectorize(m), 3, 4), m) == 0.0);
  const Matrix n = test_matrix(3, 4, 12);
  CHECK(std::abs(hs_inner(m, n) - (m.adjoint() * n).trace()) < 1e-13);
  CHECK(std::abs(hs_inner(m, n) - vectorize(m).dot(vectorize(n))) < 1e-13);
}

TEST_CASE("hermitian_eig reconstructs and orders descending") {
  Prng rng = Prng::substream(kDefaultSeed, 21);
  const Matrix h = random_hermitian(5, rng);
  const Eigensystem es = hermitian_eig(h);
  CHECK(opnorm(es.eigenvectors * es.eigenvalues.asDiagonal().toDenseMatrix().cast<Cplx>() *
                   es.eigenvectors.adjoint() -
               h) < 1e-12);
  for (Index i = 0; i + 1 < es.eigenvalues.size(); ++i)
    CHECK(es.eigenvalues(i) >= es.eigenvalues(i + 1));
  CHECK_THROWS_AS(hermitian_eig(test_matrix(3, 3, 22)), NotHermitianError);
}

TEST_CASE("psd_power: square root and pseudo-inverse root") {
  Prng rng = Prng::substream(kDefaultSeed, 23);
  const Matrix rho = random_density(4, 2, rng);  // rank-deficient on purpose
  const Matrix root = psd_power(rho, 0.5);
  CHECK(opnorm(root * root - rho) < 1e-12);
  const Matrix inv_root = psd_power(rho, -0.5);
  const Matrix p = support_projection(rho);
  CHECK(opnorm(inv_root * rho * inv_root - p) < 1e-10);
}

TEST_CASE("support projection and isometry") {
  Prng rng = Prng::substream(kDefaultSeed, 24);
  const Matrix rho = random_density(5, 3, rng);
  const Matrix p = support_projection(rho);
  CHECK(opnorm(p * p - p) < 1e-12);
  CHECK(opnorm(p * rho - rho) < 1e-12);
  CHECK(std::abs(p.trace().real() - 3.0) < 1e-9);
  const Matrix v = support_isometry(rho);
  CHECK(v.cols() == 3);
  CHECK(opnorm(v.adjoint() * v - Matrix::Identity(3, 3)) < 1e-12);
  CHECK(opnorm(v * v.adjoint() - p) < 1e-12);

  Matrix neg = Matrix::Identity(2, 2);
  neg(1, 1) = -0.5;
  CHECK_THROWS_AS(support_projection(neg), NotPsdError);
}

TEST_CASE("opnorm equals the spectral norm via an independent route") {
  for (std::uint64_t salt = 0; salt < 4; ++salt) {
    const Matrix m = test_matrix(4, 3, salt + 40);
    Eigen::SelfAdjointEigenSolver<Matrix> es(m.adjoint() * m, Eigen::EigenvaluesOnly);
    CHECK(std::abs(opnorm(m) - std::sqrt(es.eigenvalues().maxCoeff())) < 1e-12);
  }
}

TEST_CASE("orthonormalize_span finds the right dimension") {
  Matrix z = Matrix::Identity(2, 2);
  z(1, 1) = -1.0;
  Matrix x(2, 2);
  x << 0, 1, 1, 0;
  const Matrix id = Matrix::Identity(2, 2);
  // {I, Z, X, XZ} spans all of M_2; duplicates must not inflate it.
  auto basis = orthonormalize_span({id, z, x, x * z, z, id}, 2, 2);
  CHECK(basis.size() == 4);
  for (size_t i = 0; i < basis.size(); ++i)
    for (size_t j = 0; j < basis.size(); ++j) {
      const Cplx g = hs_inner(basis[i], basis[j]);
      CHECK(std::abs(g - (i == j ? 1.0 : 0.0)) < 1e-12);
    }
  CHECK(span_distance(basis, test_matrix(2, 2, 50)) < 1e-12);

  auto diag = orthonormalize_span({id, z}, 2, 2);
  CHECK(diag.size() == 2);
  CHECK(span_distance(diag, x) > 0.9);  // X is HS-orthogonal to the diagonal
}

TEST_CASE("nullspace is an orthonormal kernel basis") {
  const Matrix m = test_matrix(3, 5, 60);  // rank 3, kernel dim 2
  const Matrix ns = nullspace(m);
  CHECK(ns.cols() == 2);
  CHECK(opnorm(m * ns) < 1e-12);
  CHECK(opnorm(ns.adjoint() * ns - Matrix::Identity(2, 2)) < 1e-12);
}

TEST_CASE("gram_schmidt_columns cleans up a near-orthonormal frame") {
  Prng rng = Prng::substream(kDefaultSeed, 61);
  Matrix u = haar_unitary(4, rng).leftCols(3);
  u.col(1) += 1e-8 * u.col(0);  // small cross-talk
  gram_schmidt_columns(u);
  CHECK(opnorm(u.adjoint() * u - Matrix::Identity(3, 3)) < 1e-14);
}
