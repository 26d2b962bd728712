#include "cyclic.hpp"

#include <map>

#include "errors.hpp"

namespace nct {

bool cyc_equiv(const NcPoly& f, const NcPoly& g) {
  // f ~ g iff in f - g the coefficients over every cyclic class sum to zero
  NcPoly h = f - g;
  std::map<Word, Scalar, WordLess> sums;
  for (const auto& [w, c] : h.terms()) {
    auto [it, inserted] = sums.try_emplace(cyc_normal_form(w), c);
    if (!inserted) it->second += c;
  }
  for (const auto& [w, c] : sums)
    if (!c.is_zero()) return false;
  return true;
}

NcPoly CommutatorWitness::expand() const {
  NcPoly s;
  for (const auto& [g, h] : pairs) s += commutator(g, h);
  return s;
}

std::optional<CommutatorWitness> commutator_witness(const NcPoly& f) {
  if (!cyc_equiv(f, NcPoly::zero())) return std::nullopt;
  CommutatorWitness wit;
  // Rewrite each word to its least rotation one left-rotation at a time:
  // c*(w - rot(w)) = [c*first, rest] for w = first*rest. The rewritten terms
  // then cancel classwise because every class sum is zero.
  for (const auto& [w, c] : f.terms()) {
    std::size_t r = least_rotation(w);
    Word cur = w;
    for (std::size_t step = 0; step < r; ++step) {
      Word head{cur.front()};
      Word rest(cur.begin() + 1, cur.end());
      wit.pairs.emplace_back(NcPoly::monomial(head, c), NcPoly::monomial(rest));
      cur = rotate_left(cur, 1);
    }
  }
  if (wit.expand() != f)
    fail(errc::internal_inconsistency, "commutator witness failed re-expansion");
  return wit;
}

std::pair<NcPoly, NcPoly> cyclic_reduce_linear(const NcPoly& f, std::uint32_t n) {
  if (!f.is_linear_in(n))
    fail(errc::not_linear, "polynomial is not linear in x" + std::to_string(n));
  NcPoly g, gp;
  for (const auto& [w, c] : f.terms()) {
    // w = m1 * L * m2 with L the unique letter of index n
    std::size_t pos = 0;
    while (w[pos].index != n) ++pos;
    Word m2m1(w.begin() + static_cast<std::ptrdiff_t>(pos) + 1, w.end());
    m2m1.insert(m2m1.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos));
    if (w[pos].star) {
      // m1 x' m2 ~ x' m2 m1
      gp.add_term(m2m1, c);
    } else {
      // m1 x m2 ~ m2 m1 x
      g.add_term(m2m1, c);
    }
  }
  NcPoly xn = NcPoly::variable(n);
  NcPoly xns = NcPoly::variable(n, true);
  if (!cyc_equiv(f, g * xn + xns * gp))
    fail(errc::internal_inconsistency, "linear reduction failed verification");
  return {g, gp};
}

std::vector<std::vector<Scalar>> extract_components(
    const std::vector<std::pair<Scalar, std::vector<Scalar>>>& values, int n) {
  if (n < 0) fail(errc::invalid_argument, "component count must be nonnegative");
  // keep the first n+1 pairwise distinct evaluation points
  std::vector<std::pair<Scalar, std::vector<Scalar>>> pts;
  for (const auto& pv : values) {
    bool seen = false;
    for (const auto& q : pts)
      if (q.first == pv.first) {
        seen = true;
        break;
      }
    if (!seen) pts.push_back(pv);
    if (static_cast<int>(pts.size()) == n + 1) break;
  }
  if (static_cast<int>(pts.size()) < n + 1)
    fail(errc::underdetermined, "need at least n+1 distinct evaluation points");
  std::size_t len = pts[0].second.size();
  for (const auto& [l, v] : pts)
    if (v.size() != len) fail(errc::dimension_mismatch, "evaluation vectors differ in length");

  // Gauss-Jordan on the (n+1) x (n+1) Vandermonde system with len right-hand sides
  const int m = n + 1;
  std::vector<std::vector<Scalar>> a(m, std::vector<Scalar>(static_cast<std::size_t>(m) + len));
  for (int r = 0; r < m; ++r) {
    Scalar pw = Scalar::one();
    for (int c = 0; c < m; ++c) {
      a[r][c] = pw;
      pw *= pts[r].first;
    }
    for (std::size_t c = 0; c < len; ++c) a[r][m + c] = pts[r].second[c];
  }
  for (int col = 0; col < m; ++col) {
    int piv = col;
    while (piv < m && a[piv][col].is_zero()) ++piv;
    if (piv == m) fail(errc::internal_inconsistency, "singular Vandermonde system");
    std::swap(a[col], a[piv]);
    Scalar inv = Scalar::one() / a[col][col];
    for (auto& x : a[col]) x *= inv;
    for (int r = 0; r < m; ++r) {
      if (r == col || a[r][col].is_zero()) continue;
      Scalar factor = a[r][col];
      for (std::size_t c = 0; c < a[r].size(); ++c) a[r][c] -= factor * a[col][c];
    }
  }
  std::vector<std::vector<Scalar>> comps(m, std::vector<Scalar>(len));
  for (int k = 0; k < m; ++k)
    for (std::size_t c = 0; c < len; ++c) comps[k][c] = a[k][m + c];
  return comps;
}

} // namespace nct
