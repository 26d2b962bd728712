#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cpoly.hpp"
#include "matrix.hpp"
#include "ncpoly.hpp"

namespace nct {

/// Default cap on the predicted number of scalar monomial products in one
/// symbolic evaluation; inputs predicted to exceed the cap are refused.
inline constexpr std::uint64_t kDefaultTermBudget = 10'000'000;

/// Evaluation context mapping x{l} to the generic matrix Y_l = [z{l}_{i}{j}]
/// over the polynomial ring in the entry variables.
///
/// Star models: with the transpose or unitary star, x{l}' maps to the
/// transpose of Y_l (for the unitary model the scalars carry the Gaussian
/// field and conjugation fixes the entry variables); with the symplectic star
/// it maps to the symplectic star of Y_l. Without an involution starred
/// letters are rejected.
class GenericContext {
public:
  GenericContext(int d, InvKind inv, std::uint32_t nvars,
                 std::uint64_t term_budget = kDefaultTermBudget);

  int d() const { return d_; }
  InvKind inv() const { return inv_; }
  std::uint32_t nvars() const { return n_; }
  std::uint64_t term_budget() const { return budget_; }

  const Mat<CPoly>& Y(std::uint32_t l) const;
  const Mat<CPoly>& Ystar(std::uint32_t l) const;

private:
  int d_;
  InvKind inv_;
  std::uint32_t n_;
  std::uint64_t budget_;
  std::vector<Mat<CPoly>> y_;
  std::vector<Mat<CPoly>> ystar_;
};

/// Symbolic evaluation of f with x{l} |-> Y_l. Refuses inputs whose predicted
/// cost exceeds the context's term budget, and starred letters without a star
/// model. The context must cover every variable of f.
Mat<CPoly> eval_generic(const NcPoly& f, const GenericContext& ctx);

/// Plain evaluation at concrete matrices a_1..a_n (1-based by variable
/// index); starred letters evaluate through the involution.
Mat<Scalar> eval_numeric(const NcPoly& f, int d, const std::vector<Mat<Scalar>>& mats,
                         InvKind inv);

/// Exact certificate for one decision about the symbolic value of f.
/// `theorem` is the wire-format rule identifier used in reports.
struct Certificate {
  std::string check;   // "identity" | "central" | "trace_zero"
  bool verdict = false;
  std::string theorem;
  std::string statement;
  std::optional<CPoly> trace_poly;    // trace_zero evidence
  std::optional<Mat<CPoly>> residue;  // non-identity / non-central evidence
  std::optional<CPoly> central_value; // central evidence
  bool zero_evidence = false;         // identity evidence
  std::vector<std::string> warnings;
};

/// Is the symbolic value of f the zero matrix? Evidence: zero, or the value
/// matrix as residue.
Certificate is_identity(const NcPoly& f, const GenericContext& ctx);

/// Is the symbolic value c*I with c nonzero? Evidence: c, or the residue
/// e - e_11*I (with e itself when e is zero).
Certificate is_central(const NcPoly& f, const GenericContext& ctx);

/// Does the trace of the symbolic value vanish? Evidence: the trace
/// polynomial. Warnings flag the small dimensions and, for first-kind stars,
/// a non-symmetric f, where the sum-of-commutators reading is not certified.
Certificate trace_zero(const NcPoly& f, const GenericContext& ctx);

/// Point assignment for every entry variable of the context, taken from the
/// given matrices; the induced evaluation of Y_l is exactly mats[l-1].
std::map<ZVar, Scalar> point_from_matrices(const std::vector<Mat<Scalar>>& mats);

/// Entrywise evaluation of a symbolic matrix at a point.
Mat<Scalar> eval_matrix_at(const Mat<CPoly>& m, const std::map<ZVar, Scalar>& point);

} // namespace nct
