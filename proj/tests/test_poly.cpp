#include <array>

#include "doctest.h"
#include "linegeo/poly.hpp"
#include "linegeo/sampling.hpp"

using namespace linegeo;

namespace {

MultiPoly random_poly(RationalSeq& seq, int arity, int max_deg, int nterms) {
  MultiPoly p(arity);
  for (int k = 0; k < nterms; ++k) {
    Exponents e(arity);
    for (int v = 0; v < arity; ++v) e[v] = static_cast<int>(seq.next_int(0, max_deg));
    p += MultiPoly::monomial(arity, e, Scalar(seq.next_rational()));
  }
  return p;
}

MultiPoly random_homogeneous(RationalSeq& seq, int arity, int deg) {
  MultiPoly p(arity);
  for (const auto& e : monomials_of_degree(arity, deg))
    p += MultiPoly::monomial(arity, e, Scalar(seq.next_rational()));
  return p;
}

}  // namespace

TEST_CASE("difference of squares") {
  auto x = MultiPoly::variable(2, 0), y = MultiPoly::variable(2, 1);
  CHECK((x + y) * (x - y) == x * x - y * y);
}

TEST_CASE("partial derivative") {
  auto x = MultiPoly::variable(2, 0), y = MultiPoly::variable(2, 1);
  CHECK((x * x * y).derivative(0) == (x * y).scaled(Scalar(2)));
}

TEST_CASE("quadric parameterization of the roman quartic vanishes") {
  // substitute (yz, zx, xy, x^2+y^2+z^2) into
  // x0^2 x1^2 + x1^2 x2^2 + x2^2 x0^2 - x0 x1 x2 x3
  auto x0 = MultiPoly::variable(4, 0), x1 = MultiPoly::variable(4, 1);
  auto x2 = MultiPoly::variable(4, 2), x3 = MultiPoly::variable(4, 3);
  MultiPoly f = x0 * x0 * x1 * x1 + x1 * x1 * x2 * x2 + x2 * x2 * x0 * x0 -
                x0 * x1 * x2 * x3;
  auto a = MultiPoly::variable(3, 0), b = MultiPoly::variable(3, 1),
       c = MultiPoly::variable(3, 2);
  std::array<MultiPoly, 4> phi = {b * c, c * a, a * b, a * a + b * b + c * c};
  CHECK(f.substitute(phi).is_zero());
}

TEST_CASE("exact division recovers factors") {
  RationalSeq seq(3);
  for (int k = 0; k < 30; ++k) {
    MultiPoly p = random_poly(seq, 3, 2, 4);
    MultiPoly q = random_poly(seq, 3, 2, 3);
    if (q.is_zero()) continue;
    auto quo = (p * q).divide_exact(q);
    REQUIRE(quo.has_value());
    CHECK(*quo == p);
  }
}

TEST_CASE("inexact division is detected") {
  auto x = MultiPoly::variable(2, 0), y = MultiPoly::variable(2, 1);
  CHECK(!(x * x + y).divide_exact(x + y).has_value());
  CHECK_THROWS((x + y).divide_exact(MultiPoly(2)));
}

TEST_CASE("substitution degree law on homogeneous forms") {
  RationalSeq seq(4);
  for (int k = 0; k < 50; ++k) {
    int e = static_cast<int>(seq.next_int(1, 3));
    int d = static_cast<int>(seq.next_int(1, 2));
    MultiPoly outer = random_homogeneous(seq, 3, e);
    std::vector<MultiPoly> inner;
    for (int v = 0; v < 3; ++v) inner.push_back(random_homogeneous(seq, 3, d));
    MultiPoly s = outer.substitute(inner);
    if (s.is_zero()) continue;
    CHECK(s.is_homogeneous());
    CHECK(s.degree() == d * e);
  }
}

TEST_CASE("homogeneity flags") {
  auto x = MultiPoly::variable(2, 0), y = MultiPoly::variable(2, 1);
  CHECK((x * x + x * y).is_homogeneous());
  CHECK(!(x * x + y).is_homogeneous());
  CHECK(MultiPoly(2).is_homogeneous());
  CHECK(MultiPoly(2).degree() == -1);
}

TEST_CASE("primitive form") {
  auto x = MultiPoly::variable(1, 0);
  MultiPoly p = (x * x).scaled(Scalar(-4, 6)) + MultiPoly::constant(1, Scalar(2, 3));
  MultiPoly prim = p.primitive();
  CHECK(prim.terms().begin()->second == Scalar(1));
  CHECK(MultiPoly::proportional(p, prim));
}
