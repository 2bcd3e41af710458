#include "doctest.h"
#include "linegeo/sampling.hpp"
#include "linegeo/scalar.hpp"

using namespace linegeo;

TEST_CASE("rational arithmetic is exact") {
  RationalSeq seq(1);
  for (int k = 0; k < 200; ++k) {
    Scalar a(seq.next_rational()), b(seq.next_rational());
    CHECK((a + b) - b == a);
    if (!b.is_zero()) CHECK((a / b) * b == a);
  }
}

TEST_CASE("canonical form folds trivial extensions") {
  Scalar a(mpq_class(1), mpq_class(2), mpz_class(4));  // 1 + 2*sqrt(4) = 5
  CHECK(a.is_rational());
  CHECK(a == Scalar(5));
  Scalar b(mpq_class(0), mpq_class(1), mpz_class(8));  // sqrt(8) = 2*sqrt(2)
  CHECK(b.delta() == 2);
  CHECK(b.ex() == 2);
}

TEST_CASE("gaussian tower") {
  Scalar i = Scalar::i();
  CHECK(i * i == Scalar(-1));
  Scalar z = Scalar(3) + Scalar(2) * i;
  CHECK(z * z.conj() == Scalar(13));
  CHECK(z.inv() * z == Scalar(1));
}

TEST_CASE("quadratic extension arithmetic") {
  Scalar r2 = Scalar::sqrt_rational(mpq_class(2));
  CHECK(r2.delta() == 2);
  CHECK(r2 * r2 == Scalar(2));
  Scalar x = Scalar(1) + r2;
  CHECK(x * x == Scalar(3) + Scalar(2) * r2);
  CHECK((x / x).is_one());
  // (a+b)-b = a inside the extension
  RationalSeq seq(2);
  for (int k = 0; k < 50; ++k) {
    Scalar a = Scalar(seq.next_rational()) + Scalar(seq.next_rational()) * r2;
    Scalar b = Scalar(seq.next_rational()) + Scalar(seq.next_rational()) * r2;
    CHECK((a + b) - b == a);
    if (!b.is_zero()) CHECK((a / b) * b == a);
  }
}

TEST_CASE("mixing towers throws") {
  Scalar r2 = Scalar::sqrt_rational(mpq_class(2));
  Scalar r3 = Scalar::sqrt_rational(mpq_class(3));
  CHECK_THROWS_AS(r2 + r3, TowerError);
  CHECK_THROWS_AS(r2 * Scalar::i(), TowerError);
}

TEST_CASE("sqrt_rational handles fractions and signs") {
  Scalar h = Scalar::sqrt_rational(mpq_class(9, 4));
  CHECK(h == Scalar(3, 2));
  Scalar s = Scalar::sqrt_rational(mpq_class(-4));
  CHECK(s == Scalar(2) * Scalar::i());
  Scalar t = Scalar::sqrt_rational(mpq_class(1, 2));  // sqrt(2)/2
  CHECK(t * t == Scalar(1, 2));
  CHECK(t.delta() == 2);
}

TEST_CASE("sign of real extension values") {
  Scalar r2 = Scalar::sqrt_rational(mpq_class(2));
  CHECK((Scalar(3) - Scalar(2) * r2).sign() == 1);
  CHECK((Scalar(1) - r2).sign() == -1);
  CHECK((r2 - r2).sign() == 0);
  CHECK_THROWS(Scalar::i().sign());
}
