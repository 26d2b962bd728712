#include "matrix.hpp"

#include "cpoly.hpp"

namespace nct {

std::string inv_name(InvKind k) {
  switch (k) {
    case InvKind::none: return "none";
    case InvKind::transpose: return "transpose";
    case InvKind::symplectic: return "symplectic";
    case InvKind::conj_transpose: return "unitary";
  }
  return "none";
}

InvKind inv_from_name(const std::string& name) {
  if (name == "none") return InvKind::none;
  if (name == "transpose") return InvKind::transpose;
  if (name == "symplectic") return InvKind::symplectic;
  if (name == "unitary" || name == "conj-transpose") return InvKind::conj_transpose;
  fail(errc::invalid_argument, "unknown involution '" + name + "'");
}

namespace detail {

bool entries_all_gaussian_tagged(const Mat<Scalar>& m) {
  for (const Scalar& s : m.flat())
    if (s.field() != Field::QI) return false;
  return true;
}

bool entries_all_gaussian_tagged(const Mat<CPoly>& m) {
  for (const CPoly& p : m.flat())
    for (const auto& [mono, c] : p.terms())
      if (c.field() != Field::QI) return false;
  return true;
}

} // namespace detail

Mat<Scalar> promote_gaussian(const Mat<Scalar>& m) {
  Mat<Scalar> r(m.dim());
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j) r.at(i, j) = m.at(i, j).as_gaussian();
  return r;
}

std::string matrix_str(const Mat<Scalar>& m) {
  std::string s = "[";
  for (int i = 0; i < m.dim(); ++i) {
    if (i) s += ",";
    s += "[";
    for (int j = 0; j < m.dim(); ++j) {
      if (j) s += ",";
      s += m.at(i, j).str();
    }
    s += "]";
  }
  s += "]";
  return s;
}

} // namespace nct
