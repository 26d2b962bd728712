#include "subspace.hpp"

#include <algorithm>
#include <deque>

namespace nct {

void RowSpace::reduce(std::vector<Scalar>& v) const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Scalar& x = v[static_cast<std::size_t>(pivots_[r])];
    if (x.is_zero()) continue;
    Scalar factor = x; // pivot entry is 1
    for (int c = pivots_[r]; c < cols_; ++c) v[static_cast<std::size_t>(c)] -= factor * rows_[r][static_cast<std::size_t>(c)];
  }
}

bool RowSpace::insert(std::vector<Scalar> v) {
  if (static_cast<int>(v.size()) != cols_) fail(errc::dimension_mismatch, "row length mismatch");
  reduce(v);
  int p = 0;
  while (p < cols_ && v[static_cast<std::size_t>(p)].is_zero()) ++p;
  if (p == cols_) return false;
  Scalar inv = Scalar::one() / v[static_cast<std::size_t>(p)];
  for (int c = p; c < cols_; ++c) v[static_cast<std::size_t>(c)] *= inv;
  // eliminate the new pivot column from the existing rows
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    Scalar factor = rows_[r][static_cast<std::size_t>(p)];
    if (factor.is_zero()) continue;
    for (int c = p; c < cols_; ++c) rows_[r][static_cast<std::size_t>(c)] -= factor * v[static_cast<std::size_t>(c)];
  }
  auto it = std::upper_bound(pivots_.begin(), pivots_.end(), p);
  std::size_t idx = static_cast<std::size_t>(it - pivots_.begin());
  pivots_.insert(it, p);
  rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(idx), std::move(v));
  return true;
}

bool RowSpace::contains(std::vector<Scalar> v) const {
  if (static_cast<int>(v.size()) != cols_) fail(errc::dimension_mismatch, "row length mismatch");
  reduce(v);
  for (const Scalar& x : v)
    if (!x.is_zero()) return false;
  return true;
}

Subspace Subspace::span(int d, const std::vector<Mat<Scalar>>& gens) {
  Subspace s(d);
  for (const auto& m : gens) s.add(m);
  return s;
}

bool Subspace::add(const Mat<Scalar>& m) {
  if (m.dim() != d_) fail(errc::dimension_mismatch, "matrix dimension mismatch");
  return rs_.insert(m.flat());
}

bool Subspace::contains(const Mat<Scalar>& m) const {
  if (m.dim() != d_) fail(errc::dimension_mismatch, "matrix dimension mismatch");
  return rs_.contains(m.flat());
}

std::vector<Mat<Scalar>> Subspace::basis() const {
  std::vector<Mat<Scalar>> out;
  out.reserve(rs_.rows().size());
  for (const auto& row : rs_.rows()) {
    Mat<Scalar> m(d_);
    for (int i = 0; i < d_; ++i)
      for (int j = 0; j < d_; ++j) m.at(i, j) = row[static_cast<std::size_t>(i) * d_ + j];
    out.push_back(std::move(m));
  }
  return out;
}

std::string canonical_name_str(CanonicalName n) {
  switch (n) {
    case CanonicalName::Zero: return "0";
    case CanonicalName::Z: return "Z";
    case CanonicalName::K: return "K";
    case CanonicalName::SK: return "[S,K]";
    case CanonicalName::S: return "S";
    case CanonicalName::ZplusK: return "Z+K";
    case CanonicalName::Comm: return "[A,A]";
    case CanonicalName::Full: return "A";
    case CanonicalName::Other: return "other";
  }
  return "other";
}

CanonicalName canonical_name_from_str(const std::string& s) {
  if (s == "0" || s == "zero") return CanonicalName::Zero;
  if (s == "Z" || s == "z" || s == "center") return CanonicalName::Z;
  if (s == "K" || s == "k" || s == "skew") return CanonicalName::K;
  if (s == "[S,K]" || s == "SK" || s == "sk") return CanonicalName::SK;
  if (s == "S" || s == "s" || s == "sym") return CanonicalName::S;
  if (s == "Z+K" || s == "ZK" || s == "zk") return CanonicalName::ZplusK;
  if (s == "[A,A]" || s == "comm" || s == "AA") return CanonicalName::Comm;
  if (s == "A" || s == "a" || s == "full") return CanonicalName::Full;
  fail(errc::invalid_argument, "unknown subspace name '" + s + "'");
}

std::vector<Mat<Scalar>> matrix_units(int d) {
  std::vector<Mat<Scalar>> out;
  out.reserve(static_cast<std::size_t>(d) * d);
  for (int p = 0; p < d; ++p)
    for (int q = 0; q < d; ++q) {
      Mat<Scalar> m(d);
      m.at(p, q) = Scalar::one();
      out.push_back(std::move(m));
    }
  return out;
}

namespace {

Mat<Scalar> unit(int d, int p, int q, const Scalar& v = Scalar::one()) {
  Mat<Scalar> m(d);
  m.at(p, q) = v;
  return m;
}

// trace-zero basis: off-diagonal units plus E_11 - E_kk
std::vector<Mat<Scalar>> comm_basis(int d) {
  std::vector<Mat<Scalar>> out;
  for (int p = 0; p < d; ++p)
    for (int q = 0; q < d; ++q)
      if (p != q) out.push_back(unit(d, p, q));
  for (int k = 1; k < d; ++k) {
    Mat<Scalar> m(d);
    m.at(0, 0) = Scalar::one();
    m.at(k, k) = Scalar(-1);
    out.push_back(std::move(m));
  }
  return out;
}

std::vector<Mat<Scalar>> transpose_skew_basis(int d) {
  std::vector<Mat<Scalar>> out;
  for (int p = 0; p < d; ++p)
    for (int q = p + 1; q < d; ++q) {
      Mat<Scalar> m(d);
      m.at(p, q) = Scalar::one();
      m.at(q, p) = Scalar(-1);
      out.push_back(std::move(m));
    }
  return out;
}

std::vector<Mat<Scalar>> transpose_sym_basis(int d) {
  std::vector<Mat<Scalar>> out;
  for (int p = 0; p < d; ++p) out.push_back(unit(d, p, p));
  for (int p = 0; p < d; ++p)
    for (int q = p + 1; q < d; ++q) {
      Mat<Scalar> m(d);
      m.at(p, q) = Scalar::one();
      m.at(q, p) = Scalar::one();
      out.push_back(std::move(m));
    }
  return out;
}

// symmetric trace-zero basis: [S,K] for the transpose involution
std::vector<Mat<Scalar>> transpose_sk_basis(int d) {
  std::vector<Mat<Scalar>> out;
  for (int p = 0; p < d; ++p)
    for (int q = p + 1; q < d; ++q) {
      Mat<Scalar> m(d);
      m.at(p, q) = Scalar::one();
      m.at(q, p) = Scalar::one();
      out.push_back(std::move(m));
    }
  for (int k = 1; k < d; ++k) {
    Mat<Scalar> m(d);
    m.at(0, 0) = Scalar::one();
    m.at(k, k) = Scalar(-1);
    out.push_back(std::move(m));
  }
  return out;
}

// Symplectic skew elements on d = 2h: blocks [[A, S], [T, -A^t]] with S, T
// symmetric. The A-part, then upper and lower symmetric blocks.
std::vector<Mat<Scalar>> symplectic_skew_basis(int d) {
  int h = d / 2;
  std::vector<Mat<Scalar>> out;
  for (int p = 0; p < h; ++p)
    for (int q = 0; q < h; ++q) {
      Mat<Scalar> m(d);
      m.at(p, q) = Scalar::one();
      m.at(h + q, h + p) = Scalar(-1);
      out.push_back(std::move(m));
    }
  for (int p = 0; p < h; ++p)
    for (int q = p; q < h; ++q) {
      Mat<Scalar> m(d);
      if (p == q) {
        m.at(p, h + p) = Scalar::one();
      } else {
        m.at(p, h + q) = Scalar::one();
        m.at(q, h + p) = Scalar::one();
      }
      out.push_back(std::move(m));
    }
  for (int p = 0; p < h; ++p)
    for (int q = p; q < h; ++q) {
      Mat<Scalar> m(d);
      if (p == q) {
        m.at(h + p, p) = Scalar::one();
      } else {
        m.at(h + p, q) = Scalar::one();
        m.at(h + q, p) = Scalar::one();
      }
      out.push_back(std::move(m));
    }
  return out;
}

// Symplectic symmetric elements: blocks [[A, B], [C, A^t]] with B, C skew.
std::vector<Mat<Scalar>> symplectic_sym_basis(int d) {
  int h = d / 2;
  std::vector<Mat<Scalar>> out;
  for (int p = 0; p < h; ++p)
    for (int q = 0; q < h; ++q) {
      Mat<Scalar> m(d);
      m.at(p, q) = Scalar::one();
      m.at(h + q, h + p) = Scalar::one();
      out.push_back(std::move(m));
    }
  for (int p = 0; p < h; ++p)
    for (int q = p + 1; q < h; ++q) {
      Mat<Scalar> m(d);
      m.at(p, h + q) = Scalar::one();
      m.at(q, h + p) = Scalar(-1);
      out.push_back(std::move(m));
      Mat<Scalar> m2(d);
      m2.at(h + p, q) = Scalar::one();
      m2.at(h + q, p) = Scalar(-1);
      out.push_back(std::move(m2));
    }
  return out;
}

// Symplectic [S,K]: the trace-zero symmetric elements (A restricted to
// trace-zero in the diagonal blocks).
std::vector<Mat<Scalar>> symplectic_sk_basis(int d) {
  int h = d / 2;
  std::vector<Mat<Scalar>> out;
  for (int p = 0; p < h; ++p)
    for (int q = 0; q < h; ++q) {
      if (p == q) continue;
      Mat<Scalar> m(d);
      m.at(p, q) = Scalar::one();
      m.at(h + q, h + p) = Scalar::one();
      out.push_back(std::move(m));
    }
  for (int k = 1; k < h; ++k) {
    Mat<Scalar> m(d);
    m.at(0, 0) = Scalar::one();
    m.at(h, h) = Scalar::one();
    m.at(k, k) = Scalar(-1);
    m.at(h + k, h + k) = Scalar(-1);
    out.push_back(std::move(m));
  }
  for (int p = 0; p < h; ++p)
    for (int q = p + 1; q < h; ++q) {
      Mat<Scalar> m(d);
      m.at(p, h + q) = Scalar::one();
      m.at(q, h + p) = Scalar(-1);
      out.push_back(std::move(m));
      Mat<Scalar> m2(d);
      m2.at(h + p, q) = Scalar::one();
      m2.at(h + q, p) = Scalar(-1);
      out.push_back(std::move(m2));
    }
  return out;
}

std::vector<Mat<Scalar>> hermitian_skew_basis(int d) {
  // Q-spanning set of the skew-hermitian matrices: E_pq - E_qp,
  // i(E_pq + E_qp), and i E_pp
  std::vector<Mat<Scalar>> out;
  for (int p = 0; p < d; ++p)
    for (int q = p + 1; q < d; ++q) {
      Mat<Scalar> m(d);
      m.at(p, q) = Scalar::one().as_gaussian();
      m.at(q, p) = Scalar(-1).as_gaussian();
      out.push_back(std::move(m));
      Mat<Scalar> m2(d);
      m2.at(p, q) = Scalar::i();
      m2.at(q, p) = Scalar::i();
      out.push_back(std::move(m2));
    }
  for (int p = 0; p < d; ++p) out.push_back(unit(d, p, p, Scalar::i()));
  return out;
}

void expect_dim(const Subspace& s, int want, const char* what) {
  if (s.dim() != want)
    fail(errc::internal_inconsistency,
         std::string("canonical subspace ") + what + " has unexpected dimension " +
             std::to_string(s.dim()) + " (expected " + std::to_string(want) + ")");
}

} // namespace

std::vector<Mat<Scalar>> skew_basis(int d, InvKind inv) {
  switch (inv) {
    case InvKind::transpose:
      return transpose_skew_basis(d);
    case InvKind::symplectic:
      if (d % 2 != 0) fail(errc::invalid_argument, "symplectic involution needs even dimension");
      return symplectic_skew_basis(d);
    case InvKind::conj_transpose:
      return hermitian_skew_basis(d);
    case InvKind::none:
      break;
  }
  fail(errc::invalid_argument, "skew elements need an involution");
}

Subspace canonical_subspace(int d, InvKind inv, CanonicalName name) {
  if (d < 1) fail(errc::invalid_argument, "dimension must be positive");
  if (inv == InvKind::symplectic && d % 2 != 0)
    fail(errc::invalid_argument, "symplectic involution needs even dimension");
  bool star_only = name == CanonicalName::K || name == CanonicalName::S ||
                   name == CanonicalName::SK || name == CanonicalName::ZplusK;
  if (star_only && !is_first_kind(inv))
    fail(errc::invalid_argument,
         "subspace " + canonical_name_str(name) + " needs a first-kind involution");
  switch (name) {
    case CanonicalName::Zero:
      return Subspace(d);
    case CanonicalName::Z: {
      Subspace s = Subspace::span(d, {Mat<Scalar>::identity(d)});
      expect_dim(s, 1, "Z");
      return s;
    }
    case CanonicalName::K: {
      Subspace s = Subspace::span(d, skew_basis(d, inv));
      expect_dim(s, inv == InvKind::transpose ? d * (d - 1) / 2 : d * (d + 1) / 2, "K");
      return s;
    }
    case CanonicalName::S: {
      Subspace s = Subspace::span(
          d, inv == InvKind::transpose ? transpose_sym_basis(d) : symplectic_sym_basis(d));
      expect_dim(s, inv == InvKind::transpose ? d * (d + 1) / 2 : d * (d - 1) / 2, "S");
      return s;
    }
    case CanonicalName::SK: {
      Subspace s = Subspace::span(
          d, inv == InvKind::transpose ? transpose_sk_basis(d) : symplectic_sk_basis(d));
      expect_dim(s, inv == InvKind::transpose ? d * (d + 1) / 2 - 1 : d * (d - 1) / 2 - 1, "[S,K]");
      return s;
    }
    case CanonicalName::ZplusK: {
      std::vector<Mat<Scalar>> gens = skew_basis(d, inv);
      gens.push_back(Mat<Scalar>::identity(d));
      Subspace s = Subspace::span(d, gens);
      expect_dim(s, 1 + (inv == InvKind::transpose ? d * (d - 1) / 2 : d * (d + 1) / 2), "Z+K");
      return s;
    }
    case CanonicalName::Comm: {
      Subspace s = Subspace::span(d, comm_basis(d));
      expect_dim(s, d * d - 1, "[A,A]");
      return s;
    }
    case CanonicalName::Full: {
      Subspace s = Subspace::span(d, matrix_units(d));
      expect_dim(s, d * d, "A");
      return s;
    }
    case CanonicalName::Other:
      break;
  }
  fail(errc::invalid_argument, "no canonical basis for 'other'");
}

namespace {

// Fixed-point iteration: process a queue of spanning matrices, inserting the
// image of each under every generator operation until the rank stabilizes.
template <class Op>
Subspace closure(int d, const std::vector<Mat<Scalar>>& seeds,
                 const std::vector<Mat<Scalar>>& gens, Op op) {
  Subspace space(d);
  std::deque<Mat<Scalar>> queue;
  for (const auto& m : seeds) {
    if (m.dim() != d) fail(errc::dimension_mismatch, "seed dimension mismatch");
    if (space.add(m)) queue.push_back(m);
  }
  while (!queue.empty()) {
    Mat<Scalar> m = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : gens) {
      Mat<Scalar> h = op(m, g);
      if (space.add(h)) queue.push_back(std::move(h));
    }
  }
  return space;
}

} // namespace

Subspace lie_ideal_closure(int d, const std::vector<Mat<Scalar>>& seeds) {
  return closure(d, seeds, matrix_units(d),
                 [](const Mat<Scalar>& m, const Mat<Scalar>& g) { return mat_commutator(m, g); });
}

Subspace skew_ideal_closure(int d, InvKind inv, const std::vector<Mat<Scalar>>& seeds) {
  return closure(d, seeds, skew_basis(d, inv),
                 [](const Mat<Scalar>& m, const Mat<Scalar>& g) { return mat_commutator(m, g); });
}

Subspace congruence_closure(int d, const std::vector<Mat<Scalar>>& seeds) {
  return closure(d, seeds, matrix_units(d), [](const Mat<Scalar>& m, const Mat<Scalar>& g) {
    return m * transpose(g) + g * m;
  });
}

CanonicalName classify_subspace(const Subspace& sub, InvKind inv) {
  int d = sub.matrix_dim();
  std::vector<CanonicalName> candidates;
  if (is_first_kind(inv)) {
    candidates = {CanonicalName::Zero, CanonicalName::Z,      CanonicalName::K,
                  CanonicalName::SK,   CanonicalName::S,      CanonicalName::ZplusK,
                  CanonicalName::Comm, CanonicalName::Full};
  } else {
    candidates = {CanonicalName::Zero, CanonicalName::Z, CanonicalName::Comm, CanonicalName::Full};
  }
  for (CanonicalName name : candidates) {
    if (sub == canonical_subspace(d, inv, name)) return name;
  }
  return CanonicalName::Other;
}

} // namespace nct
