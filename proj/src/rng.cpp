#include "zuslab/rng.hpp"

#include <cmath>
#include <numbers>

namespace zuslab {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

double Prng::uniform() {
  // Top 53 bits of the raw draw -> dyadic rational in [0, 1).
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Prng::gaussian() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(theta);
  has_spare_ = true;
  return r * std::cos(theta);
}

std::uint64_t Prng::integer(std::uint64_t bound) {
  if (bound == 0) throw Error("Prng::integer: bound must be positive");
  // Rejection sampling off the top of the range keeps the draw unbiased and
  // deterministic for a given seed.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x = engine_();
  while (x >= limit) x = engine_();
  return x % bound;
}

Prng Prng::substream(std::uint64_t seed, std::uint64_t k) {
  return Prng(splitmix64(seed + 0x632be59bd9b4e019ull * (k + 1)));
}

Matrix ginibre(Index rows, Index cols, Prng& rng) {
  Matrix g(rows, cols);
  const double scale = 1.0 / std::sqrt(2.0);
  for (Index r = 0; r < rows; ++r)
    for (Index c = 0; c < cols; ++c) g(r, c) = Cplx(rng.gaussian(), rng.gaussian()) * scale;
  return g;
}

Matrix haar_unitary(Index d, Prng& rng) {
  Matrix g = ginibre(d, d, rng);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ() * Matrix::Identity(d, d);
  Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Fix the gauge: make R's diagonal positive so Q is Haar-distributed.
  for (Index k = 0; k < d; ++k) {
    const Cplx rkk = r(k, k);
    const double a = std::abs(rkk);
    q.col(k) *= (a > 0.0) ? rkk / a : Cplx(1.0, 0.0);
  }
  return q;
}

Matrix random_hermitian(Index d, Prng& rng) {
  Matrix g = ginibre(d, d, rng);
  return 0.5 * (g + g.adjoint());
}

Matrix random_density(Index d, Index rank, Prng& rng) {
  if (rank < 1 || rank > d) throw DimensionError("random_density: rank out of range");
  Matrix g = ginibre(d, rank, rng);
  Matrix rho = g * g.adjoint();
  return rho / rho.trace().real();
}

Vector random_unit_vector(Index d, Prng& rng) {
  Vector v(d);
  const double scale = 1.0 / std::sqrt(2.0);
  for (Index k = 0; k < d; ++k) v(k) = Cplx(rng.gaussian(), rng.gaussian()) * scale;
  return v / v.norm();
}

}  // namespace zuslab
