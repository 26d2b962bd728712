#include <doctest.h>

#include <algorithm>

#include "cyclic.hpp"
#include "errors.hpp"
#include "generic.hpp"
#include "helpers.hpp"
#include "ncpoly.hpp"
#include "oracle.hpp"
#include "parse.hpp"
#include "word.hpp"

using namespace nct;
using namespace nct::testing;

namespace {

Word naive_least_rotation(const Word& w) {
  Word best = w;
  Word rot = w;
  for (std::size_t k = 1; k < w.size(); ++k) {
    std::rotate(rot.begin(), rot.begin() + 1, rot.end());
    if (std::lexicographical_compare(rot.begin(), rot.end(), best.begin(), best.end()))
      best = rot;
  }
  return best;
}

Word w_of(std::initializer_list<std::pair<int, bool>> letters) {
  Word w;
  for (auto [i, s] : letters) w.push_back(Letter{static_cast<std::uint32_t>(i), s});
  return w;
}

} // namespace

TEST_CASE("word order is graded lexicographic") {
  WordLess less;
  CHECK(less(Word{}, w_of({{1, false}})));
  CHECK(less(w_of({{2, false}}), w_of({{1, false}, {1, false}}))); // shorter first
  CHECK(less(w_of({{1, false}}), w_of({{1, true}})));              // unstarred < starred
  CHECK(less(w_of({{1, true}}), w_of({{2, false}})));              // index dominates star
  CHECK(!less(Word{}, Word{}));
}

TEST_CASE("canonical rotation matches the naive scan") {
  CHECK(cyc_normal_form(w_of({{2, false}, {1, false}})) == w_of({{1, false}, {2, false}}));
  CHECK(cyc_normal_form(w_of({{1, false}, {1, true}})) == w_of({{1, false}, {1, true}}));
  CHECK(cyc_normal_form(w_of({{1, true}, {1, false}})) == w_of({{1, false}, {1, true}}));
  CHECK(cyc_normal_form(Word{}) == Word{});
  Rng rng(2024);
  for (int t = 0; t < 400; ++t) {
    Word w = rand_word(rng, 3, 8, true);
    CHECK(cyc_normal_form(w) == naive_least_rotation(w));
  }
}

TEST_CASE("star reverses and toggles") {
  Word w = w_of({{1, false}, {2, true}, {3, false}});
  CHECK(word_star(w) == w_of({{3, true}, {2, false}, {1, true}}));
  Rng rng(7);
  for (int t = 0; t < 100; ++t) {
    Word v = rand_word(rng, 4, 6, true);
    CHECK(word_star(word_star(v)) == v);
  }
}

TEST_CASE("polynomial star is an involutive anti-automorphism") {
  CHECK(parse_poly("x1*x2").star() == parse_poly("x2'*x1'"));
  Rng rng(11);
  for (int t = 0; t < 50; ++t) {
    NcPoly f = rand_poly(rng, 3, 4, 4, true);
    NcPoly g = rand_poly(rng, 3, 4, 4, true);
    CHECK((f * g).star() == g.star() * f.star());
    CHECK(f.star().star() == f);
    CHECK(f.sym_part() + f.skew_part() == f);
    CHECK(f.sym_part().star() == f.sym_part());
    CHECK(f.skew_part().star() == -f.skew_part());
  }
}

TEST_CASE("cyclic equivalence basics") {
  CHECK(cyc_equiv(parse_poly("x1*x2"), parse_poly("x2*x1")));
  CHECK(cyc_equiv(parse_poly("x1*x2 - x2*x1"), NcPoly::zero()));
  CHECK(!cyc_equiv(parse_poly("x1"), parse_poly("x2")));
  CHECK(cyc_equiv(parse_poly("x1*x1'"), parse_poly("x1'*x1")));
  // Gaussian coefficients: the criterion only compares coefficient sums
  CHECK(cyc_equiv(parse_poly("i*x1*x2 - i*x2*x1"), NcPoly::zero()));
  CHECK(!cyc_equiv(parse_poly("i*x1*x2"), parse_poly("x2*x1")));
}

TEST_CASE("cyclic equivalence is an equivalence relation") {
  Rng rng(21);
  for (int t = 0; t < 30; ++t) {
    NcPoly f = rand_poly(rng, 3, 4, 4, true);
    NcPoly g = rand_poly(rng, 3, 4, 4, true);
    CHECK(cyc_equiv(f, f));
    CHECK(cyc_equiv(f, g) == cyc_equiv(g, f));
    CHECK(cyc_equiv(f, g) == cyc_equiv(f - g, NcPoly::zero()));
  }
}

TEST_CASE("commutator witnesses certify membership") {
  auto w1 = commutator_witness(parse_poly("x1*x2 - x2*x1"));
  REQUIRE(w1.has_value());
  CHECK(w1->expand() == parse_poly("x1*x2 - x2*x1"));
  CHECK(w1->pairs.size() == 1);

  auto w0 = commutator_witness(NcPoly::zero());
  REQUIRE(w0.has_value());
  CHECK(w0->pairs.empty());

  NcPoly f = parse_poly("x1*x2*x3 - x3*x1*x2");
  auto w2 = commutator_witness(f);
  REQUIRE(w2.has_value());
  CHECK(w2->expand() == f);

  CHECK(!commutator_witness(parse_poly("x1")).has_value());
  CHECK(!commutator_witness(parse_poly("x1*x2 + x2*x1")).has_value());

  Rng rng(31);
  for (int t = 0; t < 40; ++t) {
    NcPoly s = rand_commutator_sum(rng, 3, 3, 3, true);
    auto w = commutator_witness(s);
    REQUIRE(w.has_value());
    CHECK(w->expand() == s);
  }
}

TEST_CASE("engine agrees with the brute-force span oracle") {
  Rng rng(47);
  int equivalent = 0;
  for (int t = 0; t < 60; ++t) {
    NcPoly f = t % 2 == 0 ? rand_poly(rng, 3, 5, 4, false)
                          : rand_commutator_sum(rng, 3, 2, 2, false);
    bool engine = cyc_equiv(f, NcPoly::zero());
    bool oracle = oracle_is_commutator_sum(f);
    CHECK(engine == oracle);
    if (engine) ++equivalent;
  }
  CHECK(equivalent >= 20); // the commutator-sum half keeps the test meaningful
}

TEST_CASE("multihomogeneous components partition the polynomial") {
  auto comps = parse_poly("x1 + x1*x2").multihomogeneous_components();
  CHECK(comps.size() == 2);

  CHECK(parse_poly("x1*x2*x1' + x2'*x1^2").multihomogeneous_components().size() == 1);
  CHECK(parse_poly("x1^2 + x1*x1'").multihomogeneous_components().size() == 1);

  Rng rng(53);
  for (int t = 0; t < 30; ++t) {
    NcPoly f = rand_poly(rng, 3, 6, 5, true);
    NcPoly sum;
    for (const NcPoly& c : f.multihomogeneous_components()) sum += c;
    CHECK(sum == f);
  }
}

TEST_CASE("substitution replaces the variable and its star") {
  CHECK(parse_poly("x1*x2").substitute(2, parse_poly("x1")) == parse_poly("x1^2"));
  NcPoly h = parse_poly("x2 + i*x3");
  CHECK(parse_poly("x1'").substitute(1, h) == h.star());
  CHECK(parse_poly("x1*x1'").substitute(1, h) == h * h.star());
}

TEST_CASE("linear reduction to the last variable") {
  // m*Xn*m' reduces to g = m'*m with no starred remainder
  NcPoly f1 = parse_poly("x2*x1*x3");
  auto [g1, gp1] = cyclic_reduce_linear(f1, 1);
  CHECK(g1 == parse_poly("x3*x2"));
  CHECK(gp1.is_zero());
  CHECK(cyc_equiv(f1, g1 * parse_poly("x1")));

  // m*Xn'*m' reduces to g' = m'*m
  NcPoly f2 = parse_poly("x2*x1'*x3");
  auto [g2, gp2] = cyclic_reduce_linear(f2, 1);
  CHECK(g2.is_zero());
  CHECK(gp2 == parse_poly("x3*x2"));
  CHECK(cyc_equiv(f2, parse_poly("x1'") * gp2));

  NcPoly f3 = parse_poly("x1");
  auto [g3, gp3] = cyclic_reduce_linear(f3, 1);
  CHECK(g3 == NcPoly::one());
  CHECK(gp3.is_zero());

  // mixed sums, random: the reduction must verify internally; check shape
  Rng rng(61);
  for (int t = 0; t < 25; ++t) {
    NcPoly m1 = NcPoly::monomial(rand_word(rng, 2, 3, true), rand_nonzero_coeff(rng, 3));
    NcPoly m2 = NcPoly::monomial(rand_word(rng, 2, 3, true), Scalar::one());
    bool starred = rng.uniform(0, 1) == 1;
    NcPoly x3 = NcPoly::variable(3, starred);
    NcPoly f = m1 * x3 * m2;
    auto [g, gp] = cyclic_reduce_linear(f, 3);
    CHECK(g.degree_in(3) == 0);
    CHECK(gp.degree_in(3) == 0);
    CHECK(cyc_equiv(f, g * NcPoly::variable(3) + NcPoly::variable(3, true) * gp));
  }

  try {
    cyclic_reduce_linear(parse_poly("x1^2"), 1);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == errc::not_linear);
  }
  CHECK_THROWS_AS(cyclic_reduce_linear(parse_poly("x2 + x1*x2"), 1), Error);
}

TEST_CASE("component extraction solves the scaling system exactly") {
  using Vec = std::vector<Scalar>;
  // n = 0: single value
  auto r0 = extract_components({{Scalar(1), Vec{Scalar(3), Scalar(4)}}}, 0);
  CHECK(r0 == std::vector<Vec>{Vec{Scalar(3), Scalar(4)}});

  // n = 1 triangular
  Vec c0{Scalar(1), Scalar(-2)};
  Vec c1{Scalar(5), Scalar(7)};
  auto r1 = extract_components(
      {{Scalar(0), c0}, {Scalar(1), Vec{Scalar(6), Scalar(5)}}}, 1);
  CHECK(r1[0] == c0);
  CHECK(r1[1] == c1);

  // n = 2 generate-then-solve with duplicates ignored
  Rng rng(71);
  for (int t = 0; t < 20; ++t) {
    std::vector<Vec> cs(3, Vec(4));
    for (auto& c : cs)
      for (auto& x : c) x = rand_coeff(rng, 5);
    std::vector<std::pair<Scalar, Vec>> values;
    for (long lam : {1L, 2L, 3L, 2L}) { // one duplicate on purpose
      Vec v(4, Scalar::zero());
      Scalar powl = Scalar::one();
      for (int k = 0; k <= 2; ++k) {
        for (std::size_t idx = 0; idx < v.size(); ++idx) v[idx] += powl * cs[k][idx];
        powl *= Scalar(lam);
      }
      values.push_back({Scalar(lam), v});
    }
    auto rec = extract_components(values, 2);
    REQUIRE(rec.size() == 3);
    for (int k = 0; k <= 2; ++k) CHECK(rec[static_cast<std::size_t>(k)] == cs[static_cast<std::size_t>(k)]);
  }

  try {
    extract_components({{Scalar(1), Vec{Scalar(1)}}, {Scalar(1), Vec{Scalar(1)}}}, 1);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == errc::underdetermined);
  }
}

TEST_CASE("multilinear evaluations satisfy the derivation identity") {
  // For multilinear h: [h(a_1..a_n), b] = sum_i h(a_1,..,[a_i,b],..,a_n).
  Rng rng(83);
  for (int t = 0; t < 20; ++t) {
    int n = static_cast<int>(rng.uniform(2, 3));
    int d = static_cast<int>(rng.uniform(2, 3));
    // random multilinear polynomial: a few signed permutation monomials
    NcPoly h;
    std::vector<std::uint32_t> perm;
    for (int k = 1; k <= n; ++k) perm.push_back(static_cast<std::uint32_t>(k));
    do {
      Word w;
      for (auto v : perm) w.push_back(Letter{v, false});
      h.add_term(w, rand_coeff(rng, 2));
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (h.is_zero()) continue;

    auto mats = rand_tuple(rng, static_cast<std::uint32_t>(n), d, 3);
    Mat<Scalar> b = random_int_matrix(rng, d, 3);
    Mat<Scalar> lhs =
        mat_commutator(eval_numeric(h, d, mats, InvKind::none), b);
    Mat<Scalar> rhs(d);
    for (int i = 0; i < n; ++i) {
      auto modified = mats;
      modified[static_cast<std::size_t>(i)] =
          mat_commutator(mats[static_cast<std::size_t>(i)], b);
      rhs += eval_numeric(h, d, modified, InvKind::none);
    }
    CHECK(lhs == rhs);
  }
}
