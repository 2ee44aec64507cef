#include "zuslab/star_algebra.hpp"
#include "zuslab/cp_maps.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace zuslab;

namespace {

std::vector<Matrix> family_projections(const PvmFamily& fam) {
  std::vector<Matrix> out;
  for (const Pvm& pvm : fam.pvms)
    for (const Matrix& p : pvm.projections) out.push_back(p);
  return out;
}

// A pool of block patterns with total dimension ≤ 8, cycled by the
// property-style tests below.
const std::vector<std::vector<std::pair<Index, Index>>> kPatterns = {
    {{2, 1}},                    // M2
    {{1, 1}, {1, 1}},            // diagonal in M2
    {{2, 1}, {1, 1}},            // M2 ⊕ C
    {{2, 2}},                    // M2 ⊗ I2
    {{2, 2}, {1, 1}},            // d = 5
    {{3, 1}, {1, 2}},            // d = 5, multiplicity on the abelian part
    {{2, 2}, {2, 1}, {1, 1}},    // d = 7, repeated n
    {{2, 3}, {1, 2}},            // d = 8
};

WedderburnStructure rotated_structure(const std::vector<std::pair<Index, Index>>& pattern,
                                      std::uint64_t salt) {
  Index total = 0;
  for (auto [n, m] : pattern) total += n * m;
  Prng rng = Prng::substream(kDefaultSeed, 7000 + salt);
  return make_structure(pattern, haar_unitary(total, rng));
}

}  // namespace

TEST_CASE("generate_algebra on the catalog families") {
  CHECK(generate_algebra(family_projections(catalog::s1()), 2).dim() == 4);
  CHECK(generate_algebra(family_projections(catalog::s2()), 2).dim() == 2);
  CHECK(generate_algebra(family_projections(catalog::qutrit_family()), 3).dim() == 5);
  // the unital closure of nothing is the scalars
  CHECK(generate_algebra({}, 3).dim() == 1);
}

TEST_CASE("generated algebras are closed and unital") {
  const MatrixAlgebra alg =
      generate_algebra(family_projections(catalog::qutrit_family()), 3);
  CHECK(alg.contains_identity);
  CHECK(alg.contains(Matrix::Identity(3, 3), 1e-10));
  for (const Matrix& a : alg.basis) {
    CHECK(alg.contains(a.adjoint(), 1e-10));
    for (const Matrix& b : alg.basis) CHECK(alg.contains(a * b, 1e-10));
  }
  // project is the HS-orthogonal projection onto the span
  Prng rng = Prng::substream(kDefaultSeed, 77);
  const Matrix x = random_hermitian(3, rng);
  const Matrix px = alg.project(x);
  CHECK(alg.contains(px, 1e-10));
  CHECK(std::abs(hs_inner(x - px, px)) < 1e-10);
}

TEST_CASE("commutants of the standard examples") {
  // diagonal ⊂ M2 is its own commutant
  const MatrixAlgebra diag = generate_algebra(family_projections(catalog::s2()), 2);
  CHECK(commutant(diag).dim() == 2);

  // full M2 has scalar commutant, and vice versa
  CHECK(commutant(full_algebra(2)).dim() == 1);
  const MatrixAlgebra scalars = make_algebra(2, {Matrix::Identity(2, 2)});
  CHECK(commutant(scalars).dim() == 4);

  // M2 ⊗ I2 and I2 ⊗ M2 are each other's commutants
  std::vector<Matrix> gens;
  Matrix e01 = Matrix::Zero(2, 2);
  e01(0, 1) = 1.0;
  gens.push_back(kron(e01, Matrix::Identity(2, 2)));
  const MatrixAlgebra m2i = generate_algebra(gens, 4);
  CHECK(m2i.dim() == 4);
  const MatrixAlgebra comm = commutant(m2i);
  CHECK(comm.dim() == 4);
  CHECK(comm.contains(kron(Matrix::Identity(2, 2), e01), 1e-10));
}

TEST_CASE("double commutant recovers the algebra") {
  const MatrixAlgebra alg =
      generate_algebra(family_projections(catalog::qutrit_family()), 3);
  const MatrixAlgebra bicomm = commutant(commutant(alg));
  CHECK(bicomm.dim() == alg.dim());
  for (const Matrix& b : alg.basis) CHECK(bicomm.contains(b, 1e-9));
}

TEST_CASE("center dimensions") {
  CHECK(center(full_algebra(3)).dim() == 1);
  const MatrixAlgebra qutrit =
      generate_algebra(family_projections(catalog::qutrit_family()), 3);
  CHECK(center(qutrit).dim() == 2);  // M2 ⊕ C has a two-dimensional center
}

TEST_CASE("minimal central projections of the qutrit algebra") {
  const MatrixAlgebra alg =
      generate_algebra(family_projections(catalog::qutrit_family()), 3);
  const auto projections = minimal_central_projections(alg);
  REQUIRE(projections.size() == 2);
  Matrix sum = Matrix::Zero(3, 3);
  for (const Matrix& z : projections) {
    CHECK(opnorm(z * z - z) < 1e-10);
    CHECK(hermiticity_defect(z) < 1e-10);
    sum += z;
  }
  CHECK(opnorm(sum - Matrix::Identity(3, 3)) < 1e-10);
  // canonical order: ranks descending
  CHECK(projections[0].trace().real() == doctest::Approx(2.0));
  CHECK(projections[1].trace().real() == doctest::Approx(1.0));
  // probe seed must not matter
  const auto again = minimal_central_projections(alg, {}, 987654321ull);
  for (size_t i = 0; i < projections.size(); ++i)
    CHECK(opnorm(projections[i] - again[i]) < 1e-8);
}

TEST_CASE("wedderburn_decompose on catalog algebras") {
  const MatrixAlgebra full = full_algebra(2);
  const WedderburnStructure ws = wedderburn_decompose(full);
  REQUIRE(ws.block_count() == 1);
  CHECK(ws.blocks[0].n == 2);
  CHECK(ws.blocks[0].m == 1);
  CHECK(wedderburn_defect(full, ws) < 1e-10);

  const MatrixAlgebra qutrit =
      generate_algebra(family_projections(catalog::qutrit_family()), 3);
  const WedderburnStructure qws = wedderburn_decompose(qutrit);
  REQUIRE(qws.block_count() == 2);
  CHECK(qws.blocks[0].n == 2);
  CHECK(qws.blocks[0].m == 1);
  CHECK(qws.blocks[1].n == 1);
  CHECK(qws.blocks[1].m == 1);
  CHECK(wedderburn_defect(qutrit, qws) < 1e-10);
}

TEST_CASE("wedderburn dimension identities on rotated block patterns") {
  for (size_t c = 0; c < kPatterns.size(); ++c) {
    const auto& pattern = kPatterns[c];
    const WedderburnStructure built = rotated_structure(pattern, c);
    const MatrixAlgebra alg = algebra_from_structure(built);

    Index dim_a = 0, dim_comm = 0;
    for (auto [n, m] : pattern) {
      dim_a += n * n;
      dim_comm += m * m;
    }
    CHECK(alg.dim() == dim_a);
    CHECK(commutant(alg).dim() == dim_comm);
    CHECK(center(alg).dim() == static_cast<Index>(pattern.size()));

    const WedderburnStructure ws = wedderburn_decompose(alg);
    REQUIRE(ws.block_count() == static_cast<Index>(pattern.size()));
    CHECK(wedderburn_defect(alg, ws) < 1e-8);
    // recovered (n, m) multiset matches the pattern (canonical order)
    std::vector<std::pair<Index, Index>> expect = pattern;
    std::stable_sort(expect.begin(), expect.end(), [](auto a, auto b) {
      if (a.first != b.first) return a.first > b.first;
      return a.second > b.second;
    });
    for (size_t k = 0; k < expect.size(); ++k) {
      CHECK(ws.blocks[k].n == expect[k].first);
      CHECK(ws.blocks[k].m == expect[k].second);
    }
  }
}

TEST_CASE("decomposition transform really block-diagonalizes") {
  const WedderburnStructure built = rotated_structure({{2, 1}, {1, 2}}, 99);
  const MatrixAlgebra alg = algebra_from_structure(built);
  const WedderburnStructure ws = wedderburn_decompose(alg);

  // embed/extract round trip on each block
  Prng rng = Prng::substream(kDefaultSeed, 3131);
  for (Index a = 0; a < ws.block_count(); ++a) {
    const Matrix y = random_hermitian(ws.blocks[a].n, rng);
    const Matrix lifted = ws.embed_block(y, a);
    CHECK(alg.contains(lifted, 1e-9));
    CHECK(opnorm(ws.block_entry(lifted, a) - y) < 1e-10);
  }
  // units multiply like matrix units
  const Matrix u01 = ws.unit(0, 0, 1), u11 = ws.unit(0, 1, 1);
  CHECK(opnorm(u01 * u11 - u01) < 1e-10);
  CHECK(opnorm(u01 * u01) < 1e-10);
}

TEST_CASE("decomposition is reproducible across probe seeds") {
  const MatrixAlgebra alg = algebra_from_structure(rotated_structure({{2, 2}, {1, 1}}, 5));
  const WedderburnStructure w1 = wedderburn_decompose(alg, {}, 11);
  const WedderburnStructure w2 = wedderburn_decompose(alg, {}, 22);
  REQUIRE(w1.block_count() == w2.block_count());
  for (Index a = 0; a < w1.block_count(); ++a) {
    CHECK(w1.blocks[a].n == w2.blocks[a].n);
    CHECK(w1.blocks[a].m == w2.blocks[a].m);
    // central projections are gauge-free
    CHECK(opnorm(w1.blocks[a].central_projection - w2.blocks[a].central_projection) < 1e-8);
  }
}

TEST_CASE("make_structure rejects bad transforms") {
  CHECK_THROWS_AS(make_structure({{2, 1}}, Matrix::Identity(3, 3)), DimensionError);
  Matrix not_unitary = 2.0 * Matrix::Identity(2, 2);
  CHECK_THROWS_AS(make_structure({{2, 1}}, not_unitary), Error);
}

TEST_CASE("transpose_algebra is an involution preserving dimension") {
  const MatrixAlgebra alg =
      generate_algebra(family_projections(catalog::qutrit_family()), 3);
  const MatrixAlgebra t = transpose_algebra(alg);
  CHECK(t.dim() == alg.dim());
  for (const Matrix& b : alg.basis) CHECK(t.contains(b.transpose(), 1e-10));
  const MatrixAlgebra tt = transpose_algebra(t);
  for (const Matrix& b : alg.basis) CHECK(tt.contains(b, 1e-10));
}

TEST_CASE("multiplicative domain of a pinching is the diagonal") {
  LambdaMap mix(catalog::mix());
  const MatrixMap phi = MatrixMap::sample(2, [&](const Matrix& x) { return mix.apply_phi(x); });

  Matrix z = Matrix::Identity(2, 2);
  z(1, 1) = -1.0;
  Matrix x(2, 2);
  x << 0, 1, 1, 0;
  CHECK(md_member(phi, z));
  CHECK_FALSE(md_member(phi, x));
  CHECK(md_defect(phi, z) < 1e-12);
  CHECK(md_defect(phi, x) > 0.1);

  const MatrixAlgebra md = md_algebra(phi);
  CHECK(md.dim() == 2);
  CHECK(md.contains(z, 1e-9));
}

TEST_CASE("multiplicative domain of the identity map is everything") {
  LambdaMap bell(catalog::bell());
  const MatrixMap phi = MatrixMap::sample(2, [&](const Matrix& x) { return bell.apply_phi(x); });
  CHECK(md_algebra(phi).dim() == 4);
}
