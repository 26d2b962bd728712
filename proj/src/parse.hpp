#pragma once

#include <string>
#include <vector>

#include "cpoly.hpp"
#include "matrix.hpp"
#include "ncpoly.hpp"

namespace nct {

/// Parses the polynomial expression grammar
///   expr   := ['+'|'-'] term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := atom ['^' nat]
///   atom   := rational | 'i' | var | '[' expr ',' expr ']' | '(' expr ')'
///   var    := 'x' nat ["'"]
/// with rationals p or p/q and 'i' the Gaussian unit. Errors carry 1-based
/// character positions.
NcPoly parse_poly(const std::string& text);

/// Parses a commutative polynomial in the entry variables z{l}_{i}{j}, same
/// expression structure with zvars in place of the noncommuting letters.
CPoly parse_cpoly(const std::string& text);

/// Parses a square matrix "[[a,b],[c,d]]"; entries are constant polynomial
/// expressions (rationals or Gaussian rationals).
Mat<Scalar> parse_matrix(const std::string& text);

/// Parses a ';'-separated list of matrices, all of equal dimension.
std::vector<Mat<Scalar>> parse_matrix_list(const std::string& text);

} // namespace nct
