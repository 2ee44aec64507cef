#pragma once

// Deterministic random draws. mt19937_64's raw output is fully specified by
// the standard, but the std distributions are not, so uniform/gaussian
// sampling is done by hand (53-bit mantissa scaling, Box-Muller). Same seed,
// same draws, on every platform.

#include "zuslab/linalg.hpp"

#include <cstdint>
#include <random>

namespace zuslab {

inline constexpr std::uint64_t kDefaultSeed = 20260819ull;

// Stateless mix used to derive independent streams (retries, sub-draws).
std::uint64_t splitmix64(std::uint64_t x);

class Prng {
 public:
  explicit Prng(std::uint64_t seed) : engine_(seed) {}

  double uniform();                       // [0, 1)
  double gaussian();                      // N(0, 1), Box-Muller
  std::uint64_t integer(std::uint64_t bound);  // [0, bound)

  // Independent generator for the k-th sub-stream of this seed.
  static Prng substream(std::uint64_t seed, std::uint64_t k);

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

Matrix ginibre(Index rows, Index cols, Prng& rng);  // iid standard complex gaussians
Matrix haar_unitary(Index d, Prng& rng);            // QR of Ginibre, phases fixed
Matrix random_hermitian(Index d, Prng& rng);        // GUE-style, O(1) entries
Matrix random_density(Index d, Index rank, Prng& rng);
Vector random_unit_vector(Index d, Prng& rng);

}  // namespace zuslab
