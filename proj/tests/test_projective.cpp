#include "doctest.h"
#include "linegeo/projective.hpp"
#include "linegeo/sampling.hpp"

using namespace linegeo;

namespace {

Point3 random_point(RationalSeq& seq) {
  for (;;) {
    std::array<Scalar, 4> v;
    bool nonzero = false;
    for (auto& c : v) {
      c = Scalar(seq.next_rational());
      nonzero |= !c.is_zero();
    }
    if (nonzero) return Point3(v);
  }
}

Matrix random_invertible4(RationalSeq& seq) {
  for (;;) {
    Matrix m(4, 4);
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) m.at(r, c) = Scalar(seq.next_int(-5, 5));
    if (!m.det().is_zero()) return m;
  }
}

}  // namespace

TEST_CASE("coordinate line from points and from planes") {
  Point3 p(Scalar(1), Scalar(0), Scalar(0), Scalar(0));
  Point3 q(Scalar(0), Scalar(1), Scalar(0), Scalar(0));
  PlueckerLine l = line_from_points(p, q);
  CHECK(l == PlueckerLine(std::array<Scalar, 6>{Scalar(1), Scalar(), Scalar(), Scalar(),
                                                Scalar(), Scalar()}));

  Plane3 pi2(Scalar(0), Scalar(0), Scalar(1), Scalar(0));
  Plane3 pi3(Scalar(0), Scalar(0), Scalar(0), Scalar(1));
  CHECK(line_from_planes(pi2, pi3) == l);

  CHECK_THROWS_AS(line_from_points(p, p), GeometryError);
}

TEST_CASE("plücker relation holds for random spans") {
  RationalSeq seq(11);
  int done = 0;
  while (done < 200) {
    Point3 p = random_point(seq), q = random_point(seq);
    if (p == q) continue;
    PlueckerLine l = line_from_points(p, q);  // constructor checks the relation
    CHECK(omega(l, l).is_zero());
    CHECK(point_on_line(p, l));
    CHECK(point_on_line(q, l));
    ++done;
  }
}

TEST_CASE("omega vanishes exactly on incident lines") {
  RationalSeq seq(12);
  int done = 0;
  while (done < 50) {
    Point3 p = random_point(seq), q = random_point(seq), r = random_point(seq);
    if (p == q || p == r || q == r) continue;
    PlueckerLine l1 = line_from_points(p, q);
    PlueckerLine l2 = line_from_points(p, r);
    CHECK(omega(l1, l2).is_zero());
    ++done;
  }
  // x-axis vs the line {x=1, y=1} parallel to the z-axis
  PlueckerLine xaxis = line_from_points(Point3(Scalar(1), Scalar(0), Scalar(0), Scalar(0)),
                                        Point3(Scalar(0), Scalar(1), Scalar(0), Scalar(0)));
  PlueckerLine vert = line_from_points(Point3(Scalar(1), Scalar(1), Scalar(1), Scalar(0)),
                                       Point3(Scalar(0), Scalar(0), Scalar(0), Scalar(1)));
  CHECK(!omega(xaxis, vert).is_zero());
}

TEST_CASE("meet and join with planes") {
  // z-axis against z = 0
  PlueckerLine zaxis = line_from_points(Point3(Scalar(1), Scalar(0), Scalar(0), Scalar(0)),
                                        Point3(Scalar(0), Scalar(0), Scalar(0), Scalar(1)));
  Plane3 z0(Scalar(0), Scalar(0), Scalar(0), Scalar(1));
  auto origin = meet_line_plane(zaxis, z0);
  REQUIRE(origin.has_value());
  CHECK(*origin == Point3(Scalar(1), Scalar(0), Scalar(0), Scalar(0)));

  // line inside the plane signals containment
  PlueckerLine inplane = line_from_points(Point3(Scalar(1), Scalar(0), Scalar(0), Scalar(0)),
                                          Point3(Scalar(0), Scalar(1), Scalar(0), Scalar(0)));
  CHECK(!meet_line_plane(inplane, z0).has_value());

  // plane through a line and an off-line point, checked by incidence
  RationalSeq seq(13);
  int done = 0;
  while (done < 50) {
    Point3 a = random_point(seq), b = random_point(seq), c = random_point(seq);
    if (a == b) continue;
    PlueckerLine l = line_from_points(a, b);
    if (point_on_line(c, l)) {
      CHECK(!plane_through(l, c).has_value());
      continue;
    }
    auto pi = plane_through(l, c);
    REQUIRE(pi.has_value());
    CHECK(incidence(*pi, a).is_zero());
    CHECK(incidence(*pi, b).is_zero());
    CHECK(incidence(*pi, c).is_zero());
    ++done;
  }
}

TEST_CASE("random line and plane meet incidently") {
  RationalSeq seq(14);
  int done = 0;
  while (done < 50) {
    Point3 a = random_point(seq), b = random_point(seq);
    if (a == b) continue;
    PlueckerLine l = line_from_points(a, b);
    std::array<Scalar, 4> pv;
    bool nz = false;
    for (auto& c : pv) {
      c = Scalar(seq.next_rational());
      nz |= !c.is_zero();
    }
    if (!nz) continue;
    Plane3 pi(pv);
    auto x = meet_line_plane(l, pi);
    if (!x) continue;
    CHECK(incidence(pi, *x).is_zero());
    CHECK(point_on_line(*x, l));
    ++done;
  }
}

TEST_CASE("duality: planes through a line rebuild the line") {
  RationalSeq seq(15);
  int done = 0;
  while (done < 30) {
    Point3 a = random_point(seq), b = random_point(seq);
    if (a == b) continue;
    PlueckerLine l = line_from_points(a, b);
    auto [pi0, pi1] = line_span_planes(l);
    CHECK(line_from_planes(pi0, pi1) == l);
    ++done;
  }
}

TEST_CASE("cross ratio values") {
  // points at affine parameters 1,2,3,4: ((1-3)(2-4))/((2-3)(1-4)) = 4/3
  Point3 u(Scalar(1), Scalar(0), Scalar(0), Scalar(0));
  Point3 v(Scalar(0), Scalar(1), Scalar(2), Scalar(3));
  auto at = [&](long t) {
    return Point3(u[0] + Scalar(t) * v[0], u[1] + Scalar(t) * v[1],
                  u[2] + Scalar(t) * v[2], u[3] + Scalar(t) * v[3]);
  };
  CHECK(cross_ratio(at(1), at(2), at(3), at(4)) == Scalar(4, 3));

  // normal form (0, 1, inf, lambda) evaluates to (lambda-1)/lambda in the
  // (A,B;C,D) = (AC*BD)/(BC*AD) convention
  Point3 inf(v[0] + Scalar(0), v[1], v[2], v[3]);
  Scalar lam(7, 2);
  Point3 d(u[0] + lam * v[0], u[1] + lam * v[1], u[2] + lam * v[2], u[3] + lam * v[3]);
  CHECK(cross_ratio(u, at(1), inf, d) == (lam - Scalar(1)) / lam);

  CHECK_THROWS_AS(cross_ratio(u, u, at(1), at(2)), GeometryError);
  Point3 off(Scalar(1), Scalar(1), Scalar(1), Scalar(1));
  CHECK_THROWS_AS(cross_ratio(u, at(1), at(2), off), GeometryError);
}

TEST_CASE("cross ratio is a projective invariant") {
  RationalSeq seq(16);
  Point3 u(Scalar(1), Scalar(1), Scalar(0), Scalar(2));
  Point3 v(Scalar(0), Scalar(1), Scalar(1), Scalar(1));
  auto at = [&](const mpq_class& t) {
    Scalar s(t);
    return Point3(u[0] + s * v[0], u[1] + s * v[1], u[2] + s * v[2], u[3] + s * v[3]);
  };
  Point3 a = at(0), b = at(1), c = at(2), d = at(mpq_class(7, 3));
  Scalar cr = cross_ratio(a, b, c, d);
  for (int k = 0; k < 20; ++k) {
    Matrix m = random_invertible4(seq);
    CHECK(cross_ratio(transform_point(m, a), transform_point(m, b),
                      transform_point(m, c), transform_point(m, d)) == cr);
  }
}

TEST_CASE("plucker transform matches point transforms") {
  RationalSeq seq(17);
  for (int k = 0; k < 20; ++k) {
    Matrix m = random_invertible4(seq);
    Matrix m6 = plucker_transform(m);
    Point3 a = random_point(seq), b = random_point(seq);
    if (a == b) continue;
    PlueckerLine l = line_from_points(a, b);
    PlueckerLine expect = line_from_points(transform_point(m, a), transform_point(m, b));
    CHECK(transform_line(m6, l) == expect);
    // pairing transforms with det(m)
    Point3 c = random_point(seq), d = random_point(seq);
    if (c == d) continue;
    PlueckerLine l2 = line_from_points(c, d);
    CHECK(omega(transform_line(m6, l), transform_line(m6, l2)) == m.det() * omega(l, l2));
  }
}
