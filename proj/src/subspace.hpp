#pragma once

#include <string>
#include <vector>

#include "matrix.hpp"

namespace nct {

/// Row space in reduced row echelon form over the scalar field, maintained
/// incrementally. Rows keep unit pivots in strictly increasing pivot columns,
/// with pivot columns eliminated everywhere else, so equal spaces have equal
/// row lists.
class RowSpace {
public:
  explicit RowSpace(int cols) : cols_(cols) {}

  /// Reduces v against the space and adjoins the residue; true if rank grew.
  bool insert(std::vector<Scalar> v);
  bool contains(std::vector<Scalar> v) const;
  int rank() const { return static_cast<int>(rows_.size()); }
  int cols() const { return cols_; }
  const std::vector<std::vector<Scalar>>& rows() const { return rows_; }

  bool operator==(const RowSpace& o) const { return cols_ == o.cols_ && rows_ == o.rows_; }
  bool operator!=(const RowSpace& o) const { return !(*this == o); }

private:
  int cols_;
  std::vector<std::vector<Scalar>> rows_;
  std::vector<int> pivots_;

  void reduce(std::vector<Scalar>& v) const;
};

/// Linear subspace of d x d matrices with an exact canonical basis: the RREF
/// rows of the flattened spanning set, reshaped back into matrices.
class Subspace {
public:
  explicit Subspace(int d) : d_(d), rs_(d * d) {}

  static Subspace span(int d, const std::vector<Mat<Scalar>>& gens);

  int dim() const { return rs_.rank(); }
  int matrix_dim() const { return d_; }
  bool add(const Mat<Scalar>& m);
  bool contains(const Mat<Scalar>& m) const;
  const RowSpace& rows() const { return rs_; }
  /// Canonical basis: RREF rows reshaped to matrices.
  std::vector<Mat<Scalar>> basis() const;

  bool operator==(const Subspace& o) const { return d_ == o.d_ && rs_ == o.rs_; }
  bool operator!=(const Subspace& o) const { return !(*this == o); }

private:
  int d_;
  RowSpace rs_;
};

/// Names of the distinguished subspaces of M_d:
///   Zero 0; Z scalars; K skew elements; SK commutators [S,K]; S symmetric
///   elements; ZplusK scalars plus skews; Comm trace-zero matrices [A,A];
///   Full all of M_d; Other anything else.
enum class CanonicalName { Zero, Z, K, SK, S, ZplusK, Comm, Full, Other };

std::string canonical_name_str(CanonicalName n);
CanonicalName canonical_name_from_str(const std::string& s);

/// The canonical subspace for (d, involution, name). K/S/SK/ZplusK need a
/// first-kind involution (transpose, or symplectic with even d); the
/// second-kind star admits only Zero/Z/Comm/Full over the Gaussian field.
Subspace canonical_subspace(int d, InvKind inv, CanonicalName name);

/// A basis of the skew elements for the involution. For the second-kind star
/// this is a rational-coefficient spanning set of the skew-hermitian matrices
/// (a Q-basis; the set is not closed under multiplication by i).
std::vector<Mat<Scalar>> skew_basis(int d, InvKind inv);

/// Matrix units E_pq, the standard basis of M_d.
std::vector<Mat<Scalar>> matrix_units(int d);

/// Smallest subspace containing the seeds and closed under [., M_d].
Subspace lie_ideal_closure(int d, const std::vector<Mat<Scalar>>& seeds);

/// Smallest subspace containing the seeds and closed under [., K].
Subspace skew_ideal_closure(int d, InvKind inv, const std::vector<Mat<Scalar>>& seeds);

/// Smallest subspace containing the seeds and closed under M |-> M*A^t + A*M
/// for all A (the congruence-style closure in the transpose setting).
Subspace congruence_closure(int d, const std::vector<Mat<Scalar>>& seeds);

/// Matches the subspace against the canonical list for the involution
/// (first-kind: all eight; otherwise Zero/Z/Comm/Full); Other if none match.
/// Candidates are tested in the fixed order Zero, Z, K, SK, S, ZplusK, Comm,
/// Full, so coinciding spaces at small d get the earliest name.
CanonicalName classify_subspace(const Subspace& sub, InvKind inv);

} // namespace nct
