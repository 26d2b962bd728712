#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "generic.hpp"
#include "subspace.hpp"

namespace nct {

inline constexpr int kDefaultSampleBudget = 512;
inline constexpr int kStableWindow = 8;

/// Result of classifying the span of a polynomial's matrix values.
struct ClassReport {
  int paper_case = 0;           // 1..8, the case number of the classification
  std::string verdict;          // descriptive class name
  CanonicalName span_name = CanonicalName::Other;
  int span_dim = 0;             // dimension of the predicted span
  int d = 0;
  InvKind inv = InvKind::none;
  std::uint64_t seed = 0;
  int budget = 0;
  Subspace sampled;             // sampled value span (row space)
  int samples_used = 0;
  std::vector<Certificate> certificates;
  std::vector<std::string> warnings;

  ClassReport() : sampled(1) {}
};

/// Samples random evaluation tuples (integer entries in [-5,5]; for the
/// second-kind star, Gaussian integers with parts in [-3,3]) and accumulates
/// the row space of the flattened values. Stops when the rank has been stable
/// for 8 consecutive samples, reaches `target`, or exhausts the budget.
/// Deterministic in (f, d, inv, seed, budget, target).
std::pair<Subspace, int> span_sample(const NcPoly& f, int d, InvKind inv, std::uint64_t seed,
                                     int budget, std::optional<int> target = std::nullopt);

/// Is the subspace closed under brackets with the skew elements (with all of
/// M_d when no involution is given)?
bool check_lie_closure(const Subspace& sub, InvKind inv);

/// Four-way classification of a star-free polynomial over M_d: identity /
/// central / sum of commutators and identity (trace-zero values) / full.
ClassReport classify_nostar(const NcPoly& f, int d, std::uint64_t seed = 0,
                            int budget = kDefaultSampleBudget);

/// Eight-way classification under a first-kind star (transpose, or symplectic
/// with even d). At d in {2,4} the span claim is heuristic and flagged.
ClassReport classify_star_firstkind(const NcPoly& f, int d, InvKind inv, std::uint64_t seed = 0,
                                    int budget = kDefaultSampleBudget);

/// Four-way classification under the second-kind star on matrices over the
/// Gaussian rationals. The symbolic tests treat starred letters as fresh
/// independent variables: a nonsingular linear change of coordinates
/// identifies evaluation at (a, conj-transpose a) over the Gaussian matrices
/// with evaluation of the doubled star-free polynomial at independent tuples,
/// so identity/centrality/trace decisions transfer exactly. Span dimensions
/// count over the Gaussian field.
ClassReport classify_star_secondkind(const NcPoly& f, int d, std::uint64_t seed = 0,
                                     int budget = kDefaultSampleBudget);

/// Dispatch on the involution kind.
ClassReport classify(const NcPoly& f, int d, InvKind inv, std::uint64_t seed = 0,
                     int budget = kDefaultSampleBudget);

/// The doubled polynomial: x{k}' replaced by the fresh variable x{n+k}, where
/// n is the largest variable index of f. Star-free, same coefficients.
NcPoly double_star_variables(const NcPoly& f);

/// Roman-numeral case label "(i)".."(viii)".
std::string paper_case_label(int c);

} // namespace nct
