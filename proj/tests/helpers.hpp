#pragma once

// Shared deterministic random generators for the test suite. Everything is
// seeded explicitly so failures reproduce exactly.

#include <cstdint>
#include <vector>

#include "cyclic.hpp"
#include "ncpoly.hpp"
#include "sampling.hpp"

namespace nct::testing {

inline Word rand_word(Rng& rng, std::uint32_t nvars, int maxlen, bool allow_star,
                      int minlen = 0) {
  int len = static_cast<int>(rng.uniform(minlen, maxlen));
  Word w;
  for (int k = 0; k < len; ++k) {
    auto index = static_cast<std::uint32_t>(rng.uniform(1, nvars));
    bool star = allow_star && rng.uniform(0, 1) == 1;
    w.push_back(Letter{index, star});
  }
  return w;
}

inline Scalar rand_coeff(Rng& rng, long bound) {
  long num = rng.uniform(-bound, bound);
  long den = rng.uniform(1, 3);
  return Scalar::rational(num, den);
}

inline NcPoly rand_poly(Rng& rng, std::uint32_t nvars, int max_terms, int max_len,
                        bool allow_star, long coeff_bound = 4) {
  NcPoly f;
  int terms = static_cast<int>(rng.uniform(1, max_terms));
  for (int t = 0; t < terms; ++t)
    f.add_term(rand_word(rng, nvars, max_len, allow_star), rand_coeff(rng, coeff_bound));
  return f;
}

/// Nonzero coefficient variant (rejection-sampled).
inline Scalar rand_nonzero_coeff(Rng& rng, long bound) {
  for (;;) {
    Scalar c = rand_coeff(rng, bound);
    if (!c.is_zero()) return c;
  }
}

/// A guaranteed sum of commutators: sum of [g_k, h_k] for random monomial
/// pairs (possibly zero if brackets cancel, which is still a commutator sum).
inline NcPoly rand_commutator_sum(Rng& rng, std::uint32_t nvars, int pairs, int max_len,
                                  bool allow_star) {
  NcPoly f;
  for (int k = 0; k < pairs; ++k) {
    NcPoly g = NcPoly::monomial(rand_word(rng, nvars, max_len, allow_star, 1),
                                rand_nonzero_coeff(rng, 3));
    NcPoly h = NcPoly::monomial(rand_word(rng, nvars, max_len, allow_star, 1),
                                rand_nonzero_coeff(rng, 3));
    f += commutator(g, h);
  }
  return f;
}

inline std::vector<Mat<Scalar>> rand_tuple(Rng& rng, std::uint32_t nvars, int d, long bound) {
  std::vector<Mat<Scalar>> mats;
  for (std::uint32_t l = 0; l < nvars; ++l) mats.push_back(random_int_matrix(rng, d, bound));
  return mats;
}

} // namespace nct::testing
