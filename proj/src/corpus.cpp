#include "corpus.hpp"

#include <algorithm>
#include <numeric>

#include "classify.hpp"
#include "parse.hpp"
#include "subspace.hpp"

namespace nct {

NcPoly standard_polynomial(std::uint32_t n) {
  std::vector<std::uint32_t> perm(n);
  std::iota(perm.begin(), perm.end(), 1u);
  NcPoly s;
  do {
    int inversions = 0;
    for (std::size_t a = 0; a < perm.size(); ++a)
      for (std::size_t b = a + 1; b < perm.size(); ++b)
        if (perm[a] > perm[b]) ++inversions;
    Word w;
    for (std::uint32_t v : perm) w.push_back(Letter{v, false});
    s.add_term(w, inversions % 2 == 0 ? Scalar::one() : -Scalar::one());
  } while (std::next_permutation(perm.begin(), perm.end()));
  return s;
}

namespace {

Mat<Scalar> unit(int d, int p, int q) {
  Mat<Scalar> m(d);
  m.at(p - 1, q - 1) = Scalar::one();
  return m;
}

void check_classify(std::vector<CorpusResult>& out, const std::string& name, const NcPoly& f,
                    int d, InvKind inv, int want_case, int want_dim) {
  CorpusResult r{name, false, ""};
  try {
    ClassReport rep = classify(f, d, inv);
    r.pass = rep.paper_case == want_case && rep.span_dim == want_dim;
    r.detail = "case " + paper_case_label(rep.paper_case) + ", span dim " +
               std::to_string(rep.span_dim) + "; expected " + paper_case_label(want_case) +
               ", dim " + std::to_string(want_dim);
  } catch (const std::exception& e) {
    r.detail = std::string("error: ") + e.what();
  }
  out.push_back(std::move(r));
}

void check_exceptional_span(std::vector<CorpusResult>& out, const std::string& name, int d,
                            const std::vector<Mat<Scalar>>& gens, int want_dim) {
  CorpusResult r{name, false, ""};
  try {
    Subspace sp = Subspace::span(d, gens);
    Subspace closed = skew_ideal_closure(d, InvKind::transpose, gens);
    bool is_closed = closed == sp;
    CanonicalName nm = classify_subspace(sp, InvKind::transpose);
    r.pass = is_closed && sp.dim() == want_dim && nm == CanonicalName::Other;
    r.detail = std::string(is_closed ? "bracket-closed" : "NOT bracket-closed") + ", dim " +
               std::to_string(sp.dim()) + ", name " + canonical_name_str(nm) + "; expected dim " +
               std::to_string(want_dim) + ", name other";
  } catch (const std::exception& e) {
    r.detail = std::string("error: ") + e.what();
  }
  out.push_back(std::move(r));
}

} // namespace

std::vector<CorpusResult> run_corpus() {
  std::vector<CorpusResult> out;

  check_classify(out, "s4 vanishes on 2x2 matrices", standard_polynomial(4), 2, InvKind::none, 1,
                 0);
  check_classify(out, "[x1,x2]^2 is central on 2x2 matrices", parse_poly("[x1,x2]^2"), 2,
                 InvKind::none, 2, 1);

  const InvKind t = InvKind::transpose;
  check_classify(out, "d=3 transpose: zero polynomial", NcPoly::zero(), 3, t, 1, 0);
  check_classify(out, "d=3 transpose: constant 1", NcPoly::one(), 3, t, 2, 1);
  check_classify(out, "d=3 transpose: x1 - x1' spans the skews", parse_poly("x1 - x1'"), 3, t, 3,
                 3);
  check_classify(out, "d=3 transpose: 1 + x1 - x1' spans scalars plus skews",
                 parse_poly("1 + x1 - x1'"), 3, t, 4, 4);
  check_classify(out, "d=3 transpose: [x1,x1'] spans the trace-zero symmetrics",
                 parse_poly("x1*x1' - x1'*x1"), 3, t, 5, 5);
  check_classify(out, "d=3 transpose: x1 + x1' spans the symmetrics", parse_poly("x1 + x1'"), 3, t,
                 6, 6);
  check_classify(out, "d=3 transpose: [x1,x2] spans the trace-zero matrices", parse_poly("[x1,x2]"),
                 3, t, 7, 8);
  check_classify(out, "d=3 transpose: x1 spans everything", parse_poly("x1"), 3, t, 8, 9);

  {
    Mat<Scalar> L(2);
    L.at(0, 0) = Scalar::one();
    L.at(0, 1) = Scalar::one();
    L.at(1, 0) = -Scalar::one();
    L.at(1, 1) = Scalar::one();
    check_exceptional_span(out, "d=2 transpose: exceptional line is bracket-closed, unnamed", 2,
                           {L}, 1);
  }
  {
    auto pm = [](int d, int p, int q, int r, int s, int sign) {
      Mat<Scalar> m = unit(d, p, q) - unit(d, q, p);
      Mat<Scalar> n = unit(d, r, s) - unit(d, s, r);
      return sign > 0 ? m + n : m - n;
    };
    std::vector<Mat<Scalar>> k1 = {pm(4, 1, 2, 3, 4, +1), pm(4, 1, 3, 4, 2, +1),
                                   pm(4, 1, 4, 2, 3, +1)};
    std::vector<Mat<Scalar>> k2 = {pm(4, 1, 2, 3, 4, -1), pm(4, 1, 3, 4, 2, -1),
                                   pm(4, 1, 4, 2, 3, -1)};
    check_exceptional_span(out, "d=4 transpose: exceptional ideal #1 is bracket-closed, unnamed", 4,
                           k1, 3);
    check_exceptional_span(out, "d=4 transpose: exceptional ideal #2 is bracket-closed, unnamed", 4,
                           k2, 3);
  }

  return out;
}

bool corpus_ok(const std::vector<CorpusResult>& results) {
  for (const auto& r : results)
    if (!r.pass) return false;
  return true;
}

} // namespace nct
