#include "doctest.h"
#include "linegeo/sampling.hpp"
#include "linegeo/unipoly.hpp"

using namespace linegeo;

namespace {

UniPoly linear(const mpq_class& root) { return UniPoly({Scalar(-root), Scalar(1)}); }

}  // namespace

TEST_CASE("discriminant of monic quadratics") {
  RationalSeq seq(8);
  for (int k = 0; k < 25; ++k) {
    Scalar b(seq.next_rational()), c(seq.next_rational());
    UniPoly p({c, b, Scalar(1)});
    CHECK(discriminant(p) == b * b - Scalar(4) * c);
  }
}

TEST_CASE("gcd of t^2-1 and t^3-1") {
  UniPoly a({Scalar(-1), Scalar(), Scalar(1)});
  UniPoly b({Scalar(-1), Scalar(), Scalar(), Scalar(1)});
  UniPoly g = gcd(a, b);
  CHECK(g == UniPoly({Scalar(-1), Scalar(1)}));
  // coprime pair reports a degree-0 gcd, not an error
  CHECK(gcd(UniPoly({Scalar(1), Scalar(1)}), UniPoly({Scalar(2), Scalar(1)})).degree() == 0);
}

TEST_CASE("discriminant of a polynomial with a repeated root vanishes") {
  UniPoly p = linear(1) * linear(1) * linear(2) * linear(3);
  CHECK(discriminant(p).is_zero());
  // expansion oracle: disc of the square-free part is nonzero
  UniPoly sf = linear(1) * linear(2) * linear(3);
  CHECK(!discriminant(sf).is_zero());
}

TEST_CASE("squarefree decomposition") {
  UniPoly p = linear(1) * linear(1) * linear(2) * linear(3);
  auto dec = squarefree_decomposition(p);
  REQUIRE(dec.size() == 2);
  CHECK(dec[0].second == 1);
  CHECK(dec[0].first == linear(2) * linear(3));
  CHECK(dec[1].second == 2);
  CHECK(dec[1].first == linear(1));
}

TEST_CASE("rational roots with multiplicity") {
  UniPoly p = linear(mpq_class(2, 3)) * linear(mpq_class(2, 3)) * linear(-5) *
              UniPoly({Scalar(1), Scalar(), Scalar(1)});
  auto roots = rational_roots(p);
  REQUIRE(roots.size() == 2);
  bool saw23 = false, saw5 = false;
  for (const auto& [r, m] : roots) {
    if (r == mpq_class(2, 3)) {
      saw23 = true;
      CHECK(m == 2);
    }
    if (r == -5) {
      saw5 = true;
      CHECK(m == 1);
    }
  }
  CHECK(saw23);
  CHECK(saw5);
}

TEST_CASE("solve_quadratic opens one extension") {
  auto [r1, r2] = solve_quadratic(Scalar(1), Scalar(0), Scalar(-2));
  CHECK(r1 * r1 == Scalar(2));
  CHECK(r1 == -r2);
  auto [c1, c2] = solve_quadratic(Scalar(1), Scalar(-2), Scalar(5));  // 1 ± 2i
  CHECK(c1.delta() == -1);
  CHECK(c1 + c2 == Scalar(2));
  CHECK(c1 * c2 == Scalar(5));
}

TEST_CASE("quartic_split recovers rational quadratic factors") {
  RationalSeq seq(9);
  int done = 0;
  while (done < 40) {
    UniPoly q1({Scalar(seq.next_rational()), Scalar(seq.next_rational()), Scalar(1)});
    UniPoly q2({Scalar(seq.next_rational()), Scalar(seq.next_rational()), Scalar(1)});
    UniPoly p = (q1 * q2).scaled(Scalar(seq.next_nonzero()));
    auto split = quartic_split(p);
    REQUIRE(split.has_value());
    CHECK(split->first * split->second == p);
    ++done;
  }
}

TEST_CASE("quartic_split rejects an irreducible quartic") {
  // t^4 + t + 1 is irreducible over Q
  UniPoly p({Scalar(1), Scalar(1), Scalar(), Scalar(), Scalar(1)});
  CHECK(!quartic_split(p).has_value());
  CHECK(rational_roots(p).empty());
}

TEST_CASE("isolate_roots counts with multiplicity up to degree 4") {
  // (t-1)^2 (t^2+1): two exact real (mult 2 total... one root twice), one complex pair
  UniPoly p = linear(1) * linear(1) * UniPoly({Scalar(1), Scalar(), Scalar(1)});
  auto roots = isolate_roots(p);
  int total = 0;
  bool saw_double = false, saw_pair = false;
  for (const auto& r : roots) {
    total += r.multiplicity;
    if (r.kind == RootInfo::Kind::Exact && r.value == Scalar(1) && r.multiplicity == 2)
      saw_double = true;
    if (r.kind == RootInfo::Kind::Exact && r.value.delta() == -1) saw_pair = true;
  }
  CHECK(total == 4);
  CHECK(saw_double);
  CHECK(saw_pair);
}

TEST_CASE("isolate_roots falls back to intervals for irreducible quartics") {
  // t^4 - t - 1 has two real irrational roots and one complex pair
  UniPoly p({Scalar(-1), Scalar(-1), Scalar(), Scalar(), Scalar(1)});
  auto roots = isolate_roots(p);
  int real_intervals = 0, nonreal = 0, total = 0;
  for (const auto& r : roots) {
    total += r.multiplicity;
    if (r.kind == RootInfo::Kind::Isolated) {
      ++real_intervals;
      // the interval indeed brackets a sign change
      CHECK(r.factor.eval_q(r.lo) * r.factor.eval_q(r.hi) <= 0);
    }
    if (r.kind == RootInfo::Kind::NonReal) nonreal += r.multiplicity;
  }
  CHECK(total == 4);
  CHECK(real_intervals == 2);
  CHECK(nonreal == 2);
}

TEST_CASE("tower_roots on a factorable quartic") {
  // (t^2-2)(t^2-3): four roots, two towers, listed independently
  UniPoly p = UniPoly({Scalar(-2), Scalar(), Scalar(1)}) *
              UniPoly({Scalar(-3), Scalar(), Scalar(1)});
  auto roots = tower_roots(p);
  CHECK(roots.size() == 4);
  for (const auto& [r, m] : roots) {
    CHECK(m == 1);
    Scalar sq = r * r;
    CHECK((sq == Scalar(2) || sq == Scalar(3)));
  }
}

TEST_CASE("resultant of polynomials with a common root vanishes") {
  UniPoly a = linear(2) * linear(3);
  UniPoly b = linear(2) * linear(5);
  CHECK(resultant(a, b).is_zero());
  CHECK(!resultant(linear(1), linear(2)).is_zero());
}
