#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ncpoly.hpp"

namespace nct {

/// True when f - g is a sum of commutators; decided by the coefficient-sum
/// criterion over cyclic classes of words (two words are cyclically equal iff
/// one is a rotation of the other).
bool cyc_equiv(const NcPoly& f, const NcPoly& g);

/// An explicit decomposition f = sum of commutators [g_k, h_k].
struct CommutatorWitness {
  std::vector<std::pair<NcPoly, NcPoly>> pairs;
  /// Re-expands sum [g_k, h_k].
  NcPoly expand() const;
};

/// Returns a verified decomposition of f into a sum of commutators, or
/// nullopt when f is not cyclically equivalent to zero. Built by
/// single-rotation rewriting: each word is moved stepwise to its least
/// rotation, one commutator per step; the result is re-expanded and checked
/// against f before returning.
std::optional<CommutatorWitness> commutator_witness(const NcPoly& f);

/// For f linear in x{n} (every term has degree exactly one in x{n}, stars
/// counted), returns (g, g') with f cyclically equivalent to g*x{n} + x{n}'*g'
/// and neither g nor g' involving x{n}. Verified before returning.
std::pair<NcPoly, NcPoly> cyclic_reduce_linear(const NcPoly& f, std::uint32_t n);

/// Given evaluations v_l of sum_{k=0..n} lambda^k c_k at scalars lambda_l (at
/// least n+1 distinct values required), recovers the vectors c_0..c_n by an
/// exact Vandermonde solve. All vectors must share one length.
std::vector<std::vector<Scalar>> extract_components(
    const std::vector<std::pair<Scalar, std::vector<Scalar>>>& values, int n);

} // namespace nct
