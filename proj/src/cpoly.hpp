#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "scalar.hpp"

namespace nct {

/// Commutative variable z{l}_{i}{j}: entry (i,j) of the l-th generic matrix.
/// All three coordinates are 1-based; i and j are single digits (d <= 9).
struct ZVar {
  std::int32_t l;
  std::int32_t i;
  std::int32_t j;
  auto operator<=>(const ZVar&) const = default;
};

/// Canonical variable name, e.g. z1_12.
std::string zvar_name(const ZVar& v);

using Exp = std::uint32_t;

/// Sparse monomial: (variable, exponent) pairs sorted by variable, all
/// exponents positive. The empty vector is the constant monomial.
using Mono = std::vector<std::pair<ZVar, Exp>>;

/// Strict weak order on monomials: graded lexicographic, variables ordered by
/// (l, i, j) with the earliest variable most significant.
struct MonoLess {
  bool operator()(const Mono& a, const Mono& b) const;
};

/// Sparse multivariate polynomial over Scalar in the variables z{l}_{i}{j}.
/// Terms are stored in ascending monomial order with nonzero coefficients.
class CPoly {
public:
  using Terms = std::map<Mono, Scalar, MonoLess>;

  CPoly() = default;
  static CPoly zero() { return CPoly(); }
  static CPoly one() { return constant(Scalar::one()); }
  static CPoly constant(const Scalar& c);
  static CPoly var(const ZVar& v);

  const Terms& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  bool is_constant() const;
  /// The coefficient of the constant monomial (zero when absent).
  Scalar constant_value() const;
  /// Total degree; -1 for the zero polynomial.
  int degree() const;

  CPoly operator-() const;
  CPoly& operator+=(const CPoly& o);
  CPoly& operator-=(const CPoly& o);
  CPoly operator*(const CPoly& o) const;
  CPoly& operator*=(const CPoly& o) { return *this = *this * o; }
  friend CPoly operator+(CPoly a, const CPoly& b) { return a += b; }
  friend CPoly operator-(CPoly a, const CPoly& b) { return a -= b; }

  CPoly scaled(const Scalar& c) const;
  /// Coefficientwise complex conjugate (the variables are fixed).
  CPoly conj() const;

  bool operator==(const CPoly& o) const { return t_ == o.t_; }
  bool operator!=(const CPoly& o) const { return !(*this == o); }

  /// Evaluate at a point; every variable occurring in the polynomial must be
  /// assigned, otherwise the error names the missing variable.
  Scalar eval(const std::map<ZVar, Scalar>& point) const;

  std::size_t term_count() const { return t_.size(); }

  /// Canonical text form, e.g. "2 + z1_11^2*z2_12 - 1/2*z1_12".
  std::string str() const;

private:
  Terms t_;

  void add_term(const Mono& m, const Scalar& c);
};

} // namespace nct
