#pragma once

#include <cstdint>
#include <random>

#include "matrix.hpp"

namespace nct {

/// Deterministic RNG wrapper. mt19937_64 has a bit-exact standardized stream,
/// and the mapping to ranges below avoids the implementation-defined
/// std::uniform_int_distribution, so identical seeds give identical samples
/// on every platform.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : g_(seed) {}

  std::uint64_t next() { return g_(); }

  /// Uniform-ish integer in [lo, hi] (modulo mapping; the negligible bias is
  /// irrelevant for sampling, determinism is what matters).
  long uniform(long lo, long hi) {
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(g_() % span);
  }

private:
  std::mt19937_64 g_;
};

/// Matrix with integer entries drawn uniformly from [-bound, bound].
Mat<Scalar> random_int_matrix(Rng& rng, int d, long bound);

/// Matrix with Gaussian-integer entries, real and imaginary parts drawn
/// uniformly from [-bound, bound]; entries carry the Gaussian field tag.
Mat<Scalar> random_gaussian_matrix(Rng& rng, int d, long bound);

} // namespace nct
