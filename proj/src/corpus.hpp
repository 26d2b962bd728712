#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ncpoly.hpp"

namespace nct {

/// The standard polynomial s_n = sum over permutations sigma of sign(sigma) *
/// x_{sigma(1)} ... x_{sigma(n)}.
NcPoly standard_polynomial(std::uint32_t n);

/// One bundled regression fixture's outcome.
struct CorpusResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Runs the bundled regression fixtures: the 2x2 identity s_4 and the 2x2
/// central polynomial [x1,x2]^2; the eight transpose exemplars at d=3, one
/// per classification case; and the exceptional subspace fixtures at d=2 and
/// d=4 (bracket-closed spans matching no canonical subspace).
std::vector<CorpusResult> run_corpus();

bool corpus_ok(const std::vector<CorpusResult>& results);

} // namespace nct
