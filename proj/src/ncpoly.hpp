#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "scalar.hpp"
#include "word.hpp"

namespace nct {

/// Element of the free *-algebra on x1, x2, ...: a finite Scalar-linear
/// combination of words. Terms are stored in ascending word order (length,
/// then lex) with nonzero coefficients; the algebra is unital, the empty word
/// being the identity.
class NcPoly {
public:
  using Terms = std::map<Word, Scalar, WordLess>;

  NcPoly() = default;
  static NcPoly zero() { return NcPoly(); }
  static NcPoly one() { return constant(Scalar::one()); }
  static NcPoly constant(const Scalar& c);
  static NcPoly variable(std::uint32_t index, bool star = false);
  static NcPoly monomial(const Word& w, const Scalar& c = Scalar::one());

  const Terms& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  std::size_t term_count() const { return t_.size(); }
  /// Cached flag: true when any starred letter occurs in any term.
  bool has_star() const { return has_star_; }
  /// Largest variable index occurring, 0 for constants.
  std::uint32_t max_var_index() const;
  /// Maximal word length; -1 for the zero polynomial.
  int degree() const;

  NcPoly operator-() const;
  NcPoly& operator+=(const NcPoly& o);
  NcPoly& operator-=(const NcPoly& o);
  NcPoly operator*(const NcPoly& o) const;
  NcPoly& operator*=(const NcPoly& o) { return *this = *this * o; }
  friend NcPoly operator+(NcPoly a, const NcPoly& b) { return a += b; }
  friend NcPoly operator-(NcPoly a, const NcPoly& b) { return a -= b; }
  NcPoly scaled(const Scalar& c) const;
  NcPoly pow(std::uint32_t k) const;

  bool operator==(const NcPoly& o) const { return t_ == o.t_; }
  bool operator!=(const NcPoly& o) const { return !(*this == o); }

  /// The canonical involution: reverses each word, stars every letter, and
  /// conjugates coefficients. An anti-automorphism of order two.
  NcPoly star() const;
  /// (f + f*)/2, the symmetric part; star-fixed.
  NcPoly sym_part() const;
  /// (f - f*)/2, the skew part; star-negated.
  NcPoly skew_part() const;

  /// Degree of x{index} in a word, counting x{index} and x{index}* together.
  static int word_degree_in(const Word& w, std::uint32_t index);
  /// Maximal degree of x{index} over all terms (0 for the zero polynomial).
  int degree_in(std::uint32_t index) const;
  /// True when every term has the same degree in x{index}.
  bool is_homogeneous_in(std::uint32_t index) const;
  /// True when every term has degree exactly one in x{index}.
  bool is_linear_in(std::uint32_t index) const;

  /// Splits into multihomogeneous components: terms grouped by the full
  /// degree vector (degree in each variable, stars counted with their base
  /// variable). The decomposition sums back to the polynomial.
  std::vector<NcPoly> multihomogeneous_components() const;

  /// Substitutes h for x{index} and star(h) for x{index}*.
  NcPoly substitute(std::uint32_t index, const NcPoly& h) const;

  /// Canonical text form, e.g. "1 + 2*x1*x2'^2 - 1/2*x2".
  std::string str() const;

  void add_term(const Word& w, const Scalar& c);

private:
  Terms t_;
  bool has_star_ = false;

  void refresh_star_flag();
};

/// Commutator [f, g] = fg - gf.
NcPoly commutator(const NcPoly& f, const NcPoly& g);

/// Canonical text for a single word ("1" for the empty word).
std::string word_str(const Word& w);

} // namespace nct
