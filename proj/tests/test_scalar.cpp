#include <doctest.h>

#include "errors.hpp"
#include "scalar.hpp"

using nct::errc;
using nct::Error;
using nct::Field;
using nct::Scalar;

TEST_CASE("rational construction reduces and validates") {
  Scalar half = Scalar::rational(2, 4);
  CHECK(half == Scalar::rational(1, 2));
  CHECK(half.str() == "1/2");
  CHECK(Scalar::rational(-3, -6) == Scalar::rational(1, 2));
  CHECK(Scalar::rational(3, -6).str() == "-1/2");
  CHECK(Scalar::rational(0, 7).is_zero());
  CHECK_THROWS_AS(Scalar::rational(1, 0), Error);
}

TEST_CASE("field tags join under arithmetic") {
  Scalar q = Scalar::rational(1, 2);
  Scalar gi = Scalar::gaussian(1, 1);
  CHECK(q.field() == Field::Q);
  CHECK(gi.field() == Field::QI);
  CHECK((q + gi).field() == Field::QI);
  CHECK((q * gi).field() == Field::QI);
  CHECK(q.as_gaussian().field() == Field::QI);
  CHECK(q.as_gaussian() == q); // equality ignores the tag
  CHECK((q.as_gaussian() + q).field() == Field::QI);
}

TEST_CASE("gaussian arithmetic is exact") {
  Scalar i = Scalar::i();
  CHECK(i * i == Scalar(-1));
  CHECK((Scalar(1) + i) * (Scalar(1) - i) == Scalar(2));
  // (1+i)/(1-i) = i
  CHECK((Scalar(1) + i) / (Scalar(1) - i) == i);
  Scalar z = Scalar::gaussian(mpq_class(3, 2), mpq_class(-5, 7));
  CHECK(z * z.conj() == Scalar(z.re() * z.re() + z.im() * z.im()));
  CHECK(z + (-z) == Scalar::zero());
  CHECK(z / z == Scalar::one());
  CHECK_THROWS_AS(z / Scalar::zero(), Error);
}

TEST_CASE("conjugation fixes rationals and negates the imaginary part") {
  CHECK(Scalar::rational(3, 4).conj() == Scalar::rational(3, 4));
  CHECK(Scalar::gaussian(2, 5).conj() == Scalar::gaussian(2, -5));
  Scalar z = Scalar::gaussian(mpq_class(1, 3), mpq_class(2, 9));
  CHECK(z.conj().conj() == z);
}

TEST_CASE("division catches the zero divisor exactly") {
  try {
    Scalar x = Scalar::one() / Scalar::zero();
    (void)x;
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == errc::invalid_argument);
  }
}

TEST_CASE("canonical text forms") {
  CHECK(Scalar::zero().str() == "0");
  CHECK(Scalar::one().str() == "1");
  CHECK(Scalar(-7).str() == "-7");
  CHECK(Scalar::rational(22, 6).str() == "11/3");
  CHECK(Scalar::i().str() == "i");
  CHECK((-Scalar::i()).str() == "-i");
  CHECK(Scalar::gaussian(0, 3).str() == "3*i");
  CHECK(Scalar::gaussian(2, -1).str() == "2-i");
  CHECK(Scalar::gaussian(2, 1).str() == "2+i");
  CHECK(Scalar::gaussian(mpq_class(1, 2), mpq_class(-3, 4)).str() == "1/2-3/4*i");
  // a Gaussian-tagged real prints as the plain rational
  CHECK(Scalar::one().as_gaussian().str() == "1");
}

TEST_CASE("comparisons and predicates") {
  CHECK(Scalar::one().is_one());
  CHECK(!Scalar::i().is_rational());
  CHECK(Scalar::rational(5, 5).is_one());
  CHECK(Scalar::gaussian(1, 0).is_rational()); // value in Q despite the tag
  CHECK(Scalar(2) != Scalar(3));
}
