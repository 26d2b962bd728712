#include <doctest.h>

#include <algorithm>

#include "classify.hpp"
#include "errors.hpp"
#include "helpers.hpp"
#include "matrix.hpp"
#include "sampling.hpp"
#include "subspace.hpp"

using namespace nct;
using namespace nct::testing;

namespace {

Mat<Scalar> unit(int d, int p, int q) {
  Mat<Scalar> m(d);
  m.at(p, q) = Scalar::one();
  return m;
}

} // namespace

TEST_CASE("row spaces are canonical under generator order and scaling") {
  Rng rng(3);
  for (int t = 0; t < 20; ++t) {
    int d = 3;
    std::vector<Mat<Scalar>> gens;
    for (int k = 0; k < 4; ++k) gens.push_back(random_int_matrix(rng, d, 3));
    Subspace a = Subspace::span(d, gens);
    std::vector<Mat<Scalar>> shuffled = gens;
    std::reverse(shuffled.begin(), shuffled.end());
    for (auto& m : shuffled) m = m.scaled(Scalar::rational(-3, 2));
    Subspace b = Subspace::span(d, shuffled);
    CHECK(a == b);
    CHECK(a.dim() == b.dim());
    for (const auto& g : gens) CHECK(b.contains(g));
  }
  CHECK_THROWS_AS(Subspace(2).add(Mat<Scalar>(3)), Error);
}

TEST_CASE("canonical subspace dimension table") {
  for (int d = 2; d <= 5; ++d) {
    CHECK(canonical_subspace(d, InvKind::transpose, CanonicalName::Zero).dim() == 0);
    CHECK(canonical_subspace(d, InvKind::transpose, CanonicalName::Z).dim() == 1);
    CHECK(canonical_subspace(d, InvKind::transpose, CanonicalName::K).dim() == d * (d - 1) / 2);
    CHECK(canonical_subspace(d, InvKind::transpose, CanonicalName::SK).dim() == d * (d + 1) / 2 - 1);
    CHECK(canonical_subspace(d, InvKind::transpose, CanonicalName::S).dim() == d * (d + 1) / 2);
    CHECK(canonical_subspace(d, InvKind::transpose, CanonicalName::ZplusK).dim() ==
          1 + d * (d - 1) / 2);
    CHECK(canonical_subspace(d, InvKind::transpose, CanonicalName::Comm).dim() == d * d - 1);
    CHECK(canonical_subspace(d, InvKind::transpose, CanonicalName::Full).dim() == d * d);
  }
  for (int d : {2, 4, 6}) {
    CHECK(canonical_subspace(d, InvKind::symplectic, CanonicalName::K).dim() == d * (d + 1) / 2);
    CHECK(canonical_subspace(d, InvKind::symplectic, CanonicalName::S).dim() == d * (d - 1) / 2);
    CHECK(canonical_subspace(d, InvKind::symplectic, CanonicalName::SK).dim() ==
          d * (d - 1) / 2 - 1);
    CHECK(canonical_subspace(d, InvKind::symplectic, CanonicalName::ZplusK).dim() ==
          1 + d * (d + 1) / 2);
  }
  CHECK_THROWS_AS(canonical_subspace(3, InvKind::symplectic, CanonicalName::K), Error);
  CHECK_THROWS_AS(canonical_subspace(3, InvKind::none, CanonicalName::K), Error);
  CHECK_THROWS_AS(canonical_subspace(3, InvKind::conj_transpose, CanonicalName::S), Error);
  CHECK_THROWS_AS(canonical_subspace(2, InvKind::transpose, CanonicalName::Other), Error);
}

TEST_CASE("canonical subspaces relate as expected") {
  for (InvKind inv : {InvKind::transpose, InvKind::symplectic}) {
    int d = inv == InvKind::symplectic ? 4 : 3;
    Subspace k = canonical_subspace(d, inv, CanonicalName::K);
    Subspace s = canonical_subspace(d, inv, CanonicalName::S);
    Subspace sk = canonical_subspace(d, inv, CanonicalName::SK);
    Subspace comm = canonical_subspace(d, inv, CanonicalName::Comm);
    // every K element is star-skew, every S element star-symmetric
    for (const auto& b : k.basis()) {
      CHECK(apply_star(b, inv) == -b);
      CHECK(b.trace().is_zero());
      CHECK(comm.contains(b));
    }
    for (const auto& b : s.basis()) CHECK(apply_star(b, inv) == b);
    // [S,K] really is the span of brackets of S with K, sits inside S
    Subspace brackets(d);
    for (const auto& x : s.basis())
      for (const auto& y : k.basis()) brackets.add(mat_commutator(x, y));
    CHECK(brackets == sk);
    for (const auto& b : sk.basis()) {
      CHECK(s.contains(b));
      CHECK(b.trace().is_zero());
    }
    CHECK(sk.dim() == s.dim() - 1);
  }
  // second kind: each generator is skew-hermitian, but their span over the
  // Gaussian rationals is everything (i times hermitian is skew-hermitian)
  for (int d : {2, 3}) {
    auto gens = skew_basis(d, InvKind::conj_transpose);
    for (const auto& g : gens)
      CHECK(apply_star(promote_gaussian(g), InvKind::conj_transpose) == -g);
    CHECK(Subspace::span(d, gens).dim() == d * d);
  }
}

TEST_CASE("lie ideal closure fixtures") {
  // a single off-diagonal unit generates the trace-zero matrices
  Subspace c1 = lie_ideal_closure(3, {unit(3, 0, 1)});
  CHECK(classify_subspace(c1, InvKind::none) == CanonicalName::Comm);
  CHECK(c1.dim() == 8);

  // scalars are central: the closure adds nothing
  Subspace c2 = lie_ideal_closure(3, {Mat<Scalar>::identity(3)});
  CHECK(classify_subspace(c2, InvKind::none) == CanonicalName::Z);

  // a diagonal unit has nonzero trace: closure is everything
  Subspace c3 = lie_ideal_closure(3, {unit(3, 0, 0)});
  CHECK(classify_subspace(c3, InvKind::none) == CanonicalName::Full);

  Subspace c4 = lie_ideal_closure(2, {});
  CHECK(classify_subspace(c4, InvKind::none) == CanonicalName::Zero);

  // closures are actually closed and contain their seeds
  Rng rng(17);
  for (int t = 0; t < 10; ++t) {
    Mat<Scalar> seed = random_int_matrix(rng, 3, 2);
    Subspace c = lie_ideal_closure(3, {seed});
    CHECK(c.contains(seed));
    for (const auto& b : c.basis())
      for (const auto& u : matrix_units(3)) CHECK(c.contains(mat_commutator(b, u)));
  }
}

TEST_CASE("skew ideal closure fixtures") {
  // bracket-closure of [K,K] inside K recovers all of K (transpose, d >= 3)
  for (int d : {3, 5}) {
    std::vector<Mat<Scalar>> kk;
    auto kb = skew_basis(d, InvKind::transpose);
    for (std::size_t i = 0; i < kb.size(); ++i)
      for (std::size_t j = i + 1; j < kb.size(); ++j) kk.push_back(mat_commutator(kb[i], kb[j]));
    Subspace c = skew_ideal_closure(d, InvKind::transpose, kk);
    CHECK(c == Subspace::span(d, kb));
    CHECK(classify_subspace(c, InvKind::transpose) == CanonicalName::K);
  }
  for (int d : {2, 4}) {
    std::vector<Mat<Scalar>> kk;
    auto kb = skew_basis(d, InvKind::symplectic);
    for (std::size_t i = 0; i < kb.size(); ++i)
      for (std::size_t j = i + 1; j < kb.size(); ++j) kk.push_back(mat_commutator(kb[i], kb[j]));
    Subspace c = skew_ideal_closure(d, InvKind::symplectic, kk);
    CHECK(c == Subspace::span(d, kb));
  }
}

TEST_CASE("congruence closure fixtures") {
  // m -> m g^t + g m applied from a rank-one symmetric seed fills the
  // symmetric matrices
  Subspace c = congruence_closure(2, {unit(2, 0, 0)});
  CHECK(c == canonical_subspace(2, InvKind::transpose, CanonicalName::S));
  CHECK(classify_subspace(c, InvKind::transpose) == CanonicalName::S);

  // random seeds land on one of the four congruence-stable spaces
  Rng rng(29);
  for (int t = 0; t < 40; ++t) {
    int d = static_cast<int>(rng.uniform(2, 3));
    Mat<Scalar> seed = random_int_matrix(rng, d, 2);
    CanonicalName name = classify_subspace(congruence_closure(d, {seed}), InvKind::transpose);
    bool allowed = name == CanonicalName::Zero || name == CanonicalName::K ||
                   name == CanonicalName::S || name == CanonicalName::Full;
    CHECK(allowed);
  }
}

TEST_CASE("name collisions at small dimension resolve by fixed order") {
  // symplectic d = 2: K = sl_2 = [A,A] and S = scalars = Z; first match wins
  CHECK(classify_subspace(canonical_subspace(2, InvKind::symplectic, CanonicalName::Comm),
                          InvKind::symplectic) == CanonicalName::K);
  CHECK(classify_subspace(canonical_subspace(2, InvKind::symplectic, CanonicalName::S),
                          InvKind::symplectic) == CanonicalName::Z);
  // transpose d = 2: [S,K] = [A,A]? no; they differ (dim 2 vs 3)
  CHECK(classify_subspace(canonical_subspace(2, InvKind::transpose, CanonicalName::SK),
                          InvKind::transpose) == CanonicalName::SK);
  // a genuinely unnamed space
  Subspace odd = Subspace::span(2, {unit(2, 0, 1)});
  CHECK(classify_subspace(odd, InvKind::none) == CanonicalName::Other);
  CHECK(classify_subspace(odd, InvKind::transpose) == CanonicalName::Other);
}

TEST_CASE("lie closure check distinguishes ideals from plain subspaces") {
  CHECK(check_lie_closure(canonical_subspace(3, InvKind::transpose, CanonicalName::K),
                          InvKind::transpose));
  CHECK(check_lie_closure(canonical_subspace(3, InvKind::transpose, CanonicalName::SK),
                          InvKind::transpose));
  CHECK(check_lie_closure(canonical_subspace(3, InvKind::none, CanonicalName::Comm),
                          InvKind::none));
  // a single unit is not a lie ideal of the full algebra
  CHECK(!check_lie_closure(Subspace::span(2, {unit(2, 0, 1)}), InvKind::none));
  // but the same span is [ , K]-stable for the transpose family? no: bracket
  // with E_01 - E_10 leaves the span
  CHECK(!check_lie_closure(Subspace::span(2, {unit(2, 0, 1)}), InvKind::transpose));
}

TEST_CASE("round trip of subspace names") {
  for (CanonicalName n : {CanonicalName::Zero, CanonicalName::Z, CanonicalName::K,
                          CanonicalName::SK, CanonicalName::S, CanonicalName::ZplusK,
                          CanonicalName::Comm, CanonicalName::Full, CanonicalName::Other}) {
    if (n == CanonicalName::Other) continue;
    CHECK(canonical_name_from_str(canonical_name_str(n)) == n);
  }
  CHECK(canonical_name_from_str("skew") == CanonicalName::K);
  CHECK_THROWS_AS(canonical_name_from_str("nonsense"), Error);
}
