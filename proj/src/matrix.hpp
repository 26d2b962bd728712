#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "errors.hpp"
#include "scalar.hpp"

namespace nct {

/// Involutions on d x d matrices. "none" marks a plain algebra without star.
/// transpose and symplectic fix the center elementwise (first kind);
/// conj_transpose conjugates Gaussian scalars (second kind).
enum class InvKind : std::uint8_t { none, transpose, symplectic, conj_transpose };

inline bool is_first_kind(InvKind k) { return k == InvKind::transpose || k == InvKind::symplectic; }

std::string inv_name(InvKind k);
InvKind inv_from_name(const std::string& name);

/// Dense d x d matrix over an exact coefficient ring T (Scalar or CPoly).
template <class T>
class Mat {
public:
  Mat() : d_(0) {}
  explicit Mat(int d) : d_(d), e_(static_cast<std::size_t>(d) * d) {
    if (d < 0) fail(errc::invalid_argument, "negative matrix dimension");
  }

  static Mat identity(int d) {
    Mat m(d);
    for (int k = 0; k < d; ++k) m.at(k, k) = T::one();
    return m;
  }

  int dim() const { return d_; }
  T& at(int r, int c) { return e_[static_cast<std::size_t>(r) * d_ + c]; }
  const T& at(int r, int c) const { return e_[static_cast<std::size_t>(r) * d_ + c]; }

  bool is_zero() const {
    for (const T& x : e_)
      if (!x.is_zero()) return false;
    return true;
  }

  Mat operator-() const {
    Mat r(d_);
    for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = -e_[k];
    return r;
  }

  Mat& operator+=(const Mat& o) {
    check_same(o);
    for (std::size_t k = 0; k < e_.size(); ++k) e_[k] += o.e_[k];
    return *this;
  }

  Mat& operator-=(const Mat& o) {
    check_same(o);
    for (std::size_t k = 0; k < e_.size(); ++k) e_[k] -= o.e_[k];
    return *this;
  }

  friend Mat operator+(Mat a, const Mat& b) { return a += b; }
  friend Mat operator-(Mat a, const Mat& b) { return a -= b; }

  Mat operator*(const Mat& o) const {
    check_same(o);
    Mat r(d_);
    for (int i = 0; i < d_; ++i)
      for (int k = 0; k < d_; ++k) {
        const T& a = at(i, k);
        if (a.is_zero()) continue;
        for (int j = 0; j < d_; ++j) {
          if (o.at(k, j).is_zero()) continue;
          r.at(i, j) += a * o.at(k, j);
        }
      }
    return r;
  }

  Mat scaled(const T& c) const {
    Mat r(d_);
    for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] * c;
    return r;
  }

  bool operator==(const Mat& o) const { return d_ == o.d_ && e_ == o.e_; }
  bool operator!=(const Mat& o) const { return !(*this == o); }

  T trace() const {
    T t{};
    for (int k = 0; k < d_; ++k) t += at(k, k);
    return t;
  }

  /// Row-major flattening, length d*d.
  const std::vector<T>& flat() const { return e_; }

private:
  int d_;
  std::vector<T> e_;

  void check_same(const Mat& o) const {
    if (d_ != o.d_) fail(errc::dimension_mismatch, "matrix dimensions differ");
  }
};

template <class T>
Mat<T> transpose(const Mat<T>& m) {
  Mat<T> r(m.dim());
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j) r.at(i, j) = m.at(j, i);
  return r;
}

template <class T>
Mat<T> conj_entries(const Mat<T>& m) {
  Mat<T> r(m.dim());
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j) r.at(i, j) = m.at(i, j).conj();
  return r;
}

/// The usual symplectic involution on d = 2*d0: in block form
/// [[A,B],[C,D]] |-> [[D^t, -B^t], [-C^t, A^t]].
template <class T>
Mat<T> symplectic_star(const Mat<T>& m) {
  int d = m.dim();
  if (d % 2 != 0) fail(errc::invalid_argument, "symplectic involution needs even dimension");
  int h = d / 2;
  Mat<T> r(d);
  for (int i = 0; i < h; ++i)
    for (int j = 0; j < h; ++j) {
      r.at(i, j) = m.at(h + j, h + i);        // D^t
      r.at(i, h + j) = -m.at(j, h + i);       // -B^t
      r.at(h + i, j) = -m.at(h + j, i);       // -C^t
      r.at(h + i, h + j) = m.at(j, i);        // A^t
    }
  return r;
}

class CPoly;

namespace detail {
bool entries_all_gaussian_tagged(const Mat<Scalar>& m);
bool entries_all_gaussian_tagged(const Mat<CPoly>& m);
} // namespace detail

/// Applies the involution. conj_transpose demands entries tagged with the
/// Gaussian field (promote deliberately before use); symplectic demands even
/// dimension; "none" is rejected.
template <class T>
Mat<T> apply_star(const Mat<T>& m, InvKind kind) {
  switch (kind) {
    case InvKind::transpose:
      return transpose(m);
    case InvKind::symplectic:
      return symplectic_star(m);
    case InvKind::conj_transpose:
      if (!detail::entries_all_gaussian_tagged(m))
        fail(errc::invalid_argument,
             "conjugate-transpose requires entries over the Gaussian rationals");
      return transpose(conj_entries(m));
    case InvKind::none:
      break;
  }
  fail(errc::invalid_argument, "no involution selected");
}

/// Commutator [a, b] = ab - ba.
template <class T>
Mat<T> mat_commutator(const Mat<T>& a, const Mat<T>& b) {
  return a * b - b * a;
}

/// Promotes every entry's field tag to the Gaussian rationals.
Mat<Scalar> promote_gaussian(const Mat<Scalar>& m);

/// Canonical text form "[[a,b],[c,d]]" with Scalar entry syntax.
std::string matrix_str(const Mat<Scalar>& m);

} // namespace nct
