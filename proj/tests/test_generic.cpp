#include <doctest.h>

#include <algorithm>

#include "corpus.hpp"
#include "errors.hpp"
#include "generic.hpp"
#include "helpers.hpp"
#include "parse.hpp"

using namespace nct;
using namespace nct::testing;

TEST_CASE("symbolic evaluation commutes with specialization") {
  Rng rng(101);
  for (int t = 0; t < 60; ++t) {
    int d = static_cast<int>(rng.uniform(1, 3));
    InvKind inv = static_cast<InvKind>(rng.uniform(0, 3));
    if (inv == InvKind::symplectic && d % 2 != 0) inv = InvKind::transpose;
    bool allow_star = inv != InvKind::none;
    NcPoly f = rand_poly(rng, 2, 4, 4, allow_star, 3);
    GenericContext ctx(d, inv, 2);
    Mat<CPoly> sym = eval_generic(f, ctx);
    // points with entries fixed by conjugation: that is where the generic
    // model evaluates (for the unitary star the entry variables are
    // conjugation-fixed, so its points are the rational ones)
    auto mats = rand_tuple(rng, 2, d, 3);
    CHECK(eval_matrix_at(sym, point_from_matrices(mats)) == eval_numeric(f, d, mats, inv));
  }
}

TEST_CASE("generic matrices respect the star model") {
  GenericContext t(2, InvKind::transpose, 1);
  CHECK(t.Ystar(1).at(0, 1) == t.Y(1).at(1, 0));
  GenericContext u(2, InvKind::conj_transpose, 1);
  CHECK(u.Ystar(1).at(0, 1) == u.Y(1).at(1, 0).conj()); // conj fixes the entry vars
  GenericContext s(2, InvKind::symplectic, 1);
  // 2x2 symplectic star swaps the diagonal
  CHECK(s.Ystar(1).at(0, 0) == s.Y(1).at(1, 1));
  CHECK(s.Ystar(1).at(0, 1) == s.Y(1).at(0, 1).scaled(Scalar(-1)));
  CHECK_THROWS_AS(GenericContext(3, InvKind::symplectic, 1), Error);

  // star without a model is rejected
  GenericContext none(2, InvKind::none, 1);
  try {
    eval_generic(parse_poly("x1'"), none);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == errc::unsupported);
  }
  // variables outside the context are rejected
  CHECK_THROWS_AS(eval_generic(parse_poly("x2"), none), Error);
}

TEST_CASE("standard polynomial vanishing threshold") {
  NcPoly s4 = standard_polynomial(4);
  GenericContext d2(2, InvKind::none, 4);
  Certificate c2 = is_identity(s4, d2);
  CHECK(c2.verdict);
  CHECK(c2.zero_evidence);
  CHECK(c2.theorem == "thm:gm1");
  CHECK(c2.check == "identity");

  GenericContext d3(3, InvKind::none, 4);
  Certificate c3 = is_identity(s4, d3);
  CHECK(!c3.verdict);
  REQUIRE(c3.residue.has_value());
  CHECK(!c3.residue->is_zero());
}

TEST_CASE("central detection finds nonconstant central values") {
  NcPoly f = parse_poly("[x1,x2]^2");
  GenericContext ctx(2, InvKind::none, 2);
  Certificate c = is_central(f, ctx);
  CHECK(c.verdict);
  REQUIRE(c.central_value.has_value());
  CHECK(!c.central_value->is_constant()); // det-like polynomial in the entries
  CHECK(c.theorem == "thm:gm1");

  // a noncentral polynomial leaves a residue
  Certificate nc = is_central(parse_poly("x1"), ctx);
  CHECK(!nc.verdict);
  REQUIRE(nc.residue.has_value());

  // zero is not central (the class split keeps them apart)
  Certificate z = is_central(NcPoly::zero(), ctx);
  CHECK(!z.verdict);
}

TEST_CASE("trace certificates carry the trace polynomial") {
  GenericContext ctx(2, InvKind::none, 2);
  Certificate yes = trace_zero(parse_poly("[x1,x2]"), ctx);
  CHECK(yes.verdict);
  REQUIRE(yes.trace_poly.has_value());
  CHECK(yes.trace_poly->is_zero());
  CHECK(yes.theorem == "C1");

  Certificate no = trace_zero(parse_poly("x1*x2"), ctx);
  CHECK(!no.verdict);
  REQUIRE(no.trace_poly.has_value());
  CHECK(!no.trace_poly->is_zero());
  CHECK(no.theorem == "thm:gm1");

  // trace reads off the sum of diagonal entries of the symbolic value
  Certificate one = trace_zero(parse_poly("x1"), ctx);
  CHECK(one.trace_poly->str() == "z1_22 + z1_11");
}

TEST_CASE("trace rule selection depends on dimension and symmetry") {
  // d = 1 never certifies the commutator reading
  GenericContext d1(1, InvKind::none, 2);
  Certificate c1 = trace_zero(parse_poly("[x1,x2]"), d1);
  CHECK(c1.verdict);
  CHECK(c1.theorem == "thm:gm1");
  CHECK(!c1.warnings.empty());

  // first-kind stars at the exceptional dimensions keep the weak rule even
  // for the star-fixed [x1,x1'] (note (a*a)* = a*a: this f equals f*)
  NcPoly sym = parse_poly("[x1,x1']");
  REQUIRE(sym == sym.star());
  for (int d : {2, 4}) {
    GenericContext ctx(d, InvKind::transpose, 1);
    Certificate c = trace_zero(sym, ctx);
    CHECK(c.verdict);
    CHECK(c.theorem == "thm:gm2");
    CHECK(!c.warnings.empty());
  }
  {
    GenericContext ctx(3, InvKind::transpose, 1);
    Certificate cs = trace_zero(sym, ctx);
    CHECK(cs.verdict);
    CHECK(cs.theorem == "cor:C3"); // symmetric, d outside {1,2,4}
    CHECK(cs.warnings.empty());

    GenericContext ctx2(3, InvKind::transpose, 2);
    NcPoly plain = parse_poly("[x1,x2]"); // trace zero but not star-fixed
    REQUIRE(plain != plain.star());
    Certificate c = trace_zero(plain, ctx2);
    CHECK(c.verdict);
    CHECK(c.theorem == "thm:gm2");
    CHECK(!c.warnings.empty()); // flags the missing symmetry
  }

  // the unitary model cites the involution trace theorem itself (its strong
  // reading holds with no symmetry assumption and no excluded dimensions)
  for (int d : {2, 4}) {
    GenericContext ctx(d, InvKind::conj_transpose, 1);
    NcPoly f = parse_poly("[x1,x1']");
    Certificate c = trace_zero(f, ctx);
    CHECK(c.verdict);
    CHECK(c.theorem == "thm:gm2");
    CHECK(c.statement.find("sum of commutators") != std::string::npos);
    CHECK(c.warnings.empty());
  }
}

TEST_CASE("evaluation cost guard") {
  GenericContext tiny(3, InvKind::none, 1, 10);
  try {
    eval_generic(parse_poly("x1^6"), tiny);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == errc::limit_exceeded);
  }
  // same polynomial passes with the default budget
  GenericContext ok(3, InvKind::none, 1);
  CHECK(eval_generic(parse_poly("x1^6"), ok).dim() == 3);
}

TEST_CASE("numeric evaluation handles stars and mismatches") {
  Mat<Scalar> a(2);
  a.at(0, 1) = Scalar(2);
  CHECK(eval_numeric(parse_poly("x1'"), 2, {a}, InvKind::transpose) == transpose(a));
  CHECK_THROWS_AS(eval_numeric(parse_poly("x1'"), 2, {a}, InvKind::none), Error);
  CHECK_THROWS_AS(eval_numeric(parse_poly("x2"), 2, {a}, InvKind::none), Error);
  CHECK_THROWS_AS(eval_numeric(parse_poly("x1"), 3, {a}, InvKind::none), Error);
  // constants evaluate to scalar multiples of the identity
  CHECK(eval_numeric(parse_poly("3"), 2, {}, InvKind::none) ==
        Mat<Scalar>::identity(2).scaled(Scalar(3)));
}
