#include "generic.hpp"

#include <algorithm>

#include "errors.hpp"

namespace nct {

GenericContext::GenericContext(int d, InvKind inv, std::uint32_t nvars, std::uint64_t term_budget)
    : d_(d), inv_(inv), n_(nvars), budget_(term_budget) {
  if (d < 1) fail(errc::invalid_argument, "dimension must be positive");
  if (d > 9) fail(errc::invalid_argument, "dimension exceeds 9 (entry-variable name format)");
  if (inv == InvKind::symplectic && d % 2 != 0)
    fail(errc::invalid_argument, "symplectic involution needs even dimension");
  // the unitary model works over the Gaussian rationals
  Scalar unit = inv == InvKind::conj_transpose ? Scalar::one().as_gaussian() : Scalar::one();
  y_.reserve(nvars);
  ystar_.reserve(nvars);
  for (std::uint32_t l = 1; l <= nvars; ++l) {
    Mat<CPoly> y(d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        y.at(i, j) = CPoly::var(ZVar{static_cast<std::int32_t>(l), i + 1, j + 1}).scaled(unit);
    switch (inv) {
      case InvKind::none:
        break;
      case InvKind::transpose:
      case InvKind::conj_transpose:
        // conjugation fixes the entry variables, so the unitary star of Y_l
        // is also its plain transpose
        ystar_.push_back(transpose(y));
        break;
      case InvKind::symplectic:
        ystar_.push_back(symplectic_star(y));
        break;
    }
    y_.push_back(std::move(y));
  }
}

const Mat<CPoly>& GenericContext::Y(std::uint32_t l) const {
  if (l < 1 || l > n_) fail(errc::invalid_argument, "variable index out of context range");
  return y_[l - 1];
}

const Mat<CPoly>& GenericContext::Ystar(std::uint32_t l) const {
  if (inv_ == InvKind::none)
    fail(errc::unsupported, "starred letter without an involution");
  if (l < 1 || l > n_) fail(errc::invalid_argument, "variable index out of context range");
  return ystar_[l - 1];
}

namespace {

// Predicted scalar-product count: a word of length L costs about d^(L+1)
// monomial multiplications when every intermediate entry is dense.
std::uint64_t predicted_cost(const NcPoly& f, int d) {
  std::uint64_t total = 0;
  const std::uint64_t dd = static_cast<std::uint64_t>(d);
  for (const auto& [w, c] : f.terms()) {
    // d^(len+1), saturating
    std::uint64_t cost = 1;
    for (std::size_t k = 0; k < w.size() + 1; ++k) {
      if (cost > UINT64_MAX / dd) {
        cost = UINT64_MAX;
        break;
      }
      cost *= dd;
    }
    if (UINT64_MAX - total < cost) return UINT64_MAX;
    total += cost;
  }
  return total;
}

} // namespace

Mat<CPoly> eval_generic(const NcPoly& f, const GenericContext& ctx) {
  if (f.max_var_index() > ctx.nvars())
    fail(errc::invalid_argument, "polynomial uses variables beyond the context");
  if (predicted_cost(f, ctx.d()) > ctx.term_budget())
    fail(errc::limit_exceeded, "predicted symbolic term count exceeds the budget");
  int d = ctx.d();
  Mat<CPoly> acc(d);
  for (const auto& [w, c] : f.terms()) {
    Mat<CPoly> m(d);
    for (int k = 0; k < d; ++k) m.at(k, k) = CPoly::constant(c);
    for (const Letter& l : w) m = m * (l.star ? ctx.Ystar(l.index) : ctx.Y(l.index));
    acc += m;
  }
  return acc;
}

Mat<Scalar> eval_numeric(const NcPoly& f, int d, const std::vector<Mat<Scalar>>& mats,
                         InvKind inv) {
  if (d < 1) fail(errc::invalid_argument, "dimension must be positive");
  for (const auto& m : mats)
    if (m.dim() != d) fail(errc::dimension_mismatch, "evaluation matrix dimension mismatch");
  std::vector<Mat<Scalar>> stars;
  if (inv != InvKind::none) {
    stars.reserve(mats.size());
    for (const auto& m : mats)
      stars.push_back(apply_star(inv == InvKind::conj_transpose ? promote_gaussian(m) : m, inv));
  }
  Mat<Scalar> acc(d);
  for (const auto& [w, c] : f.terms()) {
    Mat<Scalar> m(d);
    for (int k = 0; k < d; ++k) m.at(k, k) = c;
    for (const Letter& l : w) {
      if (l.index > mats.size())
        fail(errc::invalid_argument, "missing matrix for x" + std::to_string(l.index));
      if (l.star) {
        if (inv == InvKind::none) fail(errc::unsupported, "starred letter without an involution");
        m = m * stars[l.index - 1];
      } else {
        m = m * mats[l.index - 1];
      }
    }
    acc += m;
  }
  return acc;
}

namespace {

const char* kRuleTraceNoStar = "thm:gm1";
const char* kRuleTraceStar = "thm:gm2";
const char* kRuleCycEquivNoStar = "C1";
const char* kRuleCycEquivStar = "cor:C3";

void add_small_d_warnings(Certificate& cert, const GenericContext& ctx) {
  if (ctx.d() == 1)
    cert.warnings.push_back("dimension 1 is commutative; every commutator collapses");
  if (is_first_kind(ctx.inv()) && (ctx.d() == 2 || ctx.d() == 4))
    cert.warnings.push_back(
        "dimension " + std::to_string(ctx.d()) +
        " is exceptional for first-kind stars; the sum-of-commutators reading is not certified");
}

} // namespace

Certificate is_identity(const NcPoly& f, const GenericContext& ctx) {
  Mat<CPoly> e = eval_generic(f, ctx);
  Certificate cert;
  cert.check = "identity";
  cert.theorem = ctx.inv() == InvKind::none ? kRuleTraceNoStar : kRuleTraceStar;
  cert.verdict = e.is_zero();
  if (cert.verdict) {
    cert.zero_evidence = true;
    cert.statement = "the symbolic value vanishes; every matrix value is zero";
  } else {
    cert.residue = e;
    cert.statement = "the symbolic value is a nonzero matrix";
  }
  return cert;
}

Certificate is_central(const NcPoly& f, const GenericContext& ctx) {
  Mat<CPoly> e = eval_generic(f, ctx);
  Certificate cert;
  cert.check = "central";
  cert.theorem = ctx.inv() == InvKind::none ? kRuleTraceNoStar : kRuleTraceStar;
  CPoly c = e.at(0, 0);
  Mat<CPoly> residue = e;
  for (int k = 0; k < ctx.d(); ++k) residue.at(k, k) -= c;
  if (!e.is_zero() && residue.is_zero()) {
    cert.verdict = true;
    cert.central_value = c;
    cert.statement = "the symbolic value is c*I with c nonzero; values are central";
  } else {
    cert.verdict = false;
    cert.residue = e.is_zero() ? e : residue;
    cert.statement = e.is_zero() ? "the symbolic value is zero, not a nonzero scalar"
                                 : "the symbolic value is not a scalar matrix";
  }
  return cert;
}

Certificate trace_zero(const NcPoly& f, const GenericContext& ctx) {
  Mat<CPoly> e = eval_generic(f, ctx);
  Certificate cert;
  cert.check = "trace_zero";
  CPoly tr = e.trace();
  cert.verdict = tr.is_zero();
  cert.trace_poly = tr;
  add_small_d_warnings(cert, ctx);
  if (ctx.inv() == InvKind::none) {
    if (cert.verdict && ctx.d() >= 2) {
      cert.theorem = kRuleCycEquivNoStar;
      cert.statement =
          "the symbolic trace vanishes; the polynomial is a sum of commutators plus a vanishing "
          "polynomial of this dimension";
    } else {
      cert.theorem = kRuleTraceNoStar;
      cert.statement = cert.verdict ? "the symbolic trace vanishes"
                                    : "the symbolic trace is a nonzero polynomial";
    }
  } else {
    bool symmetric = is_first_kind(ctx.inv()) ? f == f.star() : true;
    if (is_first_kind(ctx.inv()) && !symmetric)
      cert.warnings.push_back(
          "the polynomial is not star-fixed; the sum-of-commutators reading needs a symmetric "
          "polynomial under a first-kind star");
    bool exceptional = is_first_kind(ctx.inv()) && (ctx.d() == 1 || ctx.d() == 2 || ctx.d() == 4);
    if (cert.verdict && symmetric && !exceptional && ctx.d() >= 2) {
      // The unitary model's points have conjugation-fixed entries, so a
      // vanishing trace here does not decide the stronger claim quantified
      // over all Gaussian matrix points; the commutator-sum rule id is
      // therefore reserved for the first-kind stars.
      cert.theorem = is_first_kind(ctx.inv()) ? kRuleCycEquivStar : kRuleTraceStar;
      cert.statement =
          "the symbolic trace vanishes; the polynomial is a sum of commutators plus a vanishing "
          "polynomial of this star model";
    } else {
      cert.theorem = kRuleTraceStar;
      cert.statement = cert.verdict ? "the symbolic trace vanishes"
                                    : "the symbolic trace is a nonzero polynomial";
    }
  }
  return cert;
}

std::map<ZVar, Scalar> point_from_matrices(const std::vector<Mat<Scalar>>& mats) {
  std::map<ZVar, Scalar> point;
  for (std::size_t l = 0; l < mats.size(); ++l) {
    const Mat<Scalar>& m = mats[l];
    for (int i = 0; i < m.dim(); ++i)
      for (int j = 0; j < m.dim(); ++j)
        point.emplace(ZVar{static_cast<std::int32_t>(l + 1), i + 1, j + 1}, m.at(i, j));
  }
  return point;
}

Mat<Scalar> eval_matrix_at(const Mat<CPoly>& m, const std::map<ZVar, Scalar>& point) {
  Mat<Scalar> r(m.dim());
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j) r.at(i, j) = m.at(i, j).eval(point);
  return r;
}

} // namespace nct
