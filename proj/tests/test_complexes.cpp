#include "doctest.h"
#include "linegeo/complexes.hpp"
#include "linegeo/sampling.hpp"
#include "linegeo/unipoly.hpp"

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

PlueckerLine random_line(RationalSeq& seq) {
  for (;;) {
    Point3 a = random_point(seq), b = random_point(seq);
    if (!(a == b)) return line_from_points(a, b);
  }
}

const std::array<Scalar, 6> kLambda{Scalar(1), Scalar(2), Scalar(3),
                                    Scalar(4), Scalar(5), Scalar(6)};

}  // namespace

TEST_CASE("linear complex membership and special axis") {
  // special complex: covector is itself a line; its axis belongs to it
  RationalSeq seq(20);
  PlueckerLine axis = random_line(seq);
  LinearComplex special(axis.coords());
  CHECK(special.is_special());
  CHECK(special.contains(special.axis()));
  CHECK(special.axis() == axis);

  // a non-special covector has no axis
  LinearComplex general({Scalar(1), Scalar(0), Scalar(0), Scalar(1), Scalar(0), Scalar(0)});
  CHECK(!general.is_special());
  CHECK_THROWS_AS(general.axis(), GeometryError);
}

TEST_CASE("quadratic complex membership by root extraction on a line pencil") {
  RationalSeq seq(21);
  auto k2 = QuadraticComplex::diagonal(kLambda);
  int done = 0, nonmember = 0;
  while (done < 10) {
    // pencil of lines through a common point: p + t q stays on the Klein quadric
    Point3 base = random_point(seq), e1 = random_point(seq), e2 = random_point(seq);
    if (base == e1 || base == e2 || e1 == e2) continue;
    PlueckerLine p = line_from_points(base, e1);
    PlueckerLine q = line_from_points(base, e2);
    // restrict the form to the pencil
    Scalar a = k2.eval(q);
    Scalar b;
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j) b += p.coords()[i] * k2.form().at(i, j) * q.coords()[j];
    Scalar c = k2.eval(p);
    if (!k2.eval(p).is_zero()) ++nonmember;  // generic line is not a member
    if (a.is_zero()) continue;
    Scalar disc = b * b - a * c;
    if (!disc.is_rational()) continue;
    auto [t1, t2] = solve_quadratic(a, Scalar(2) * b, c);
    std::array<Scalar, 6> member;
    for (int i = 0; i < 6; ++i) member[i] = p.coords()[i] + t1 * q.coords()[i];
    PlueckerLine l(member);  // constructor re-checks the Plücker relation
    CHECK(k2.eval(l).is_zero());
    ++done;
  }
  CHECK(nonmember > 0);
}

TEST_CASE("complex cone has the vertex in its kernel") {
  RationalSeq seq(22);
  auto k2 = QuadraticComplex::diagonal(kLambda);
  for (int k = 0; k < 20; ++k) {
    Point3 p = random_point(seq);
    Matrix m = complex_cone(k2, p);
    auto mp = m.apply(std::span<const Scalar>(p.v));
    for (const auto& c : mp) CHECK(c.is_zero());
    // generic point: rank exactly 3
    CHECK(m.rank() == 3);
  }
}

TEST_CASE("tetrahedral singularity surface degenerates to four planes") {
  auto t = QuadraticComplex::tetrahedral(Scalar(1), Scalar(2), Scalar(4));
  MultiPoly k = singularity_surface(t);
  MultiPoly x0x1x2x3 = MultiPoly::variable(4, 0) * MultiPoly::variable(4, 1) *
                       MultiPoly::variable(4, 2) * MultiPoly::variable(4, 3);
  CHECK(MultiPoly::proportional(k, x0x1x2x3));
}

TEST_CASE("perturbed Klein form gives a degenerate complex") {
  Matrix a = klein_matrix();
  a.at(0, 0) = Scalar(1, 7);
  QuadraticComplex k2(a);
  CHECK_THROWS_AS(singularity_surface(k2), GeometryError);
}

TEST_CASE("diagonal complex: irreducible quartic singularity surface") {
  auto d = QuadraticComplex::diagonal(kLambda);
  MultiPoly k = singularity_surface(d);
  CHECK(k.degree() == 4);
  CHECK(k.is_homogeneous());

  // trial factorization certificate: a line whose restriction is an
  // irreducible quartic rules out any factor over the rationals
  RationalSeq seq(23);
  bool certified = false;
  for (int attempt = 0; attempt < 50 && !certified; ++attempt) {
    Point3 a = random_point(seq), b = random_point(seq);
    if (a == b) continue;
    std::vector<MultiPoly> line;
    for (int i = 0; i < 4; ++i)
      line.push_back(MultiPoly::constant(1, a[i]) +
                     MultiPoly::variable(1, 0).scaled(b[i]));
    UniPoly rest = UniPoly::from_multipoly(k.substitute(line));
    if (rest.degree() != 4) continue;
    if (!rational_roots(rest).empty()) continue;
    if (quartic_split(rest).has_value()) continue;
    certified = true;
  }
  CHECK(certified);
}

TEST_CASE("points sampled on the singularity surface have degenerate cones") {
  auto d = QuadraticComplex::diagonal(kLambda);
  MultiPoly k = singularity_surface(d);
  auto pts = sample_surface_points(k, 25, 42);
  REQUIRE(static_cast<int>(pts.size()) == 25);
  for (const auto& p : pts) {
    std::array<Scalar, 4> pv = p.v;
    CHECK(k.eval(std::span<const Scalar>(pv)).is_zero());
    CHECK(complex_cone(d, p).rank() <= 2);
  }
}

TEST_CASE("singularity surface ignores multiples of the Klein form") {
  auto d = QuadraticComplex::diagonal(kLambda);
  Matrix shifted = d.form() + klein_matrix().scaled(Scalar(7, 3));
  QuadraticComplex d2(shifted);
  CHECK(singularity_surface(d) == singularity_surface(d2));
}

TEST_CASE("tetrahedral cross ratio is a scaling invariant") {
  RationalSeq seq(24);
  int done = 0;
  while (done < 5) {
    PlueckerLine l = random_line(seq);
    Scalar cr;
    try {
      cr = tetra_cross_ratio(l);
    } catch (const GeometryError&) {
      continue;
    }
    int scalings = 0;
    while (scalings < 20) {
      Scalar alpha(seq.next_nonzero()), beta(seq.next_nonzero()), gamma(seq.next_nonzero());
      PlueckerLine image = scaling_action(alpha, beta, gamma, l);
      CHECK(tetra_cross_ratio(image) == cr);
      ++scalings;
    }
    ++done;
  }
}

TEST_CASE("line through two opposite tetrahedron edges is degenerate") {
  PlueckerLine l = line_from_points(Point3(Scalar(1), Scalar(1), Scalar(0), Scalar(0)),
                                    Point3(Scalar(0), Scalar(0), Scalar(1), Scalar(1)));
  CHECK_THROWS_AS(tetra_cross_ratio(l), GeometryError);
}

TEST_CASE("tetrahedral complex contains the scaling orbit of its members") {
  RationalSeq seq(25);
  TetrahedralComplex t({Scalar(1), Scalar(2), Scalar(4)});
  PlueckerLine l = t.sample_member();
  CHECK(t.contains(l));
  Scalar cr = t.fixed_cross_ratio();
  for (int k = 0; k < 20; ++k) {
    Scalar alpha(seq.next_nonzero()), beta(seq.next_nonzero()), gamma(seq.next_nonzero());
    PlueckerLine image = scaling_action(alpha, beta, gamma, l);
    CHECK(t.contains(image));
    CHECK(tetra_cross_ratio(image) == cr);
  }
  // the pencil member through a generic line contains that line's orbit
  PlueckerLine g = random_line(seq);
  const auto& p = g.coords();
  Scalar x = p[0] * p[3], y = p[1] * p[4], z = p[2] * p[5];
  TetrahedralComplex through({y - z, z - x, x - y});
  CHECK(through.contains(g));
  for (int k = 0; k < 20; ++k) {
    Scalar alpha(seq.next_nonzero()), beta(seq.next_nonzero()), gamma(seq.next_nonzero());
    CHECK(through.contains(scaling_action(alpha, beta, gamma, g)));
  }
}

TEST_CASE("congruence directrices across the three pencil types") {
  // self-pairing t^2 - 1: two rational directrices
  LinearComplex a({Scalar(1), Scalar(), Scalar(), Scalar(-1, 2), Scalar(), Scalar()});
  LinearComplex ap({Scalar(1), Scalar(), Scalar(), Scalar(1, 2), Scalar(), Scalar()});
  Congruence c(a, ap);
  auto d = congruence_directrices(c);
  CHECK(!d.doubled);
  CHECK(d.delta == 0);
  CHECK(!(d.r1 == d.r2));
  CHECK(omega(d.r1, d.r2) != Scalar(0));  // skew directrices

  // sample congruence lines via points on the two directrices
  RationalSeq seq(26);
  auto [p1, p2] = line_span_points(d.r1);
  auto [q1, q2] = line_span_points(d.r2);
  int done = 0;
  while (done < 10) {
    Scalar s(seq.next_rational()), t(seq.next_rational());
    std::array<Scalar, 4> xv, yv;
    bool nzx = false, nzy = false;
    for (int i = 0; i < 4; ++i) {
      xv[i] = p1[i] + s * p2[i];
      yv[i] = q1[i] + t * q2[i];
      nzx |= !xv[i].is_zero();
      nzy |= !yv[i].is_zero();
    }
    if (!nzx || !nzy) continue;
    PlueckerLine sample = line_from_points(Point3(xv), Point3(yv));
    CHECK(c.contains(sample));
    CHECK(omega(sample, d.r1).is_zero());
    CHECK(omega(sample, d.r2).is_zero());
    ++done;
  }

  // self-pairing t^2: doubled directrix
  LinearComplex sp({Scalar(1), Scalar(), Scalar(), Scalar(), Scalar(), Scalar()});
  LinearComplex orth({Scalar(), Scalar(1), Scalar(), Scalar(), Scalar(1, 2), Scalar()});
  auto dd = congruence_directrices(Congruence(orth, sp));
  CHECK(dd.doubled);
  CHECK(dd.r1 == dd.r2);

  // self-pairing t^2 + 1: directrices over the Gaussian tower
  LinearComplex ga({Scalar(1), Scalar(), Scalar(), Scalar(1, 2), Scalar(), Scalar()});
  LinearComplex gb({Scalar(), Scalar(1), Scalar(), Scalar(), Scalar(1, 2), Scalar()});
  auto gd = congruence_directrices(Congruence(ga, gb));
  CHECK(gd.delta == -1);
  CHECK(!gd.doubled);
  // every congruence line meets both complex directrices
  MultiPoly quad(4);
  // lines in the congruence: y = c0 w0 + ... with W a basis of the 4-space
  // cut by the two linear conditions; membership reduces to a quadric in c
  Matrix cond(2, 6);
  for (int i = 0; i < 6; ++i) {
    // Omega(a, p) = (dual a) . p
    cond.at(0, i) = ga.a[(i + 3) % 6];
    cond.at(1, i) = gb.a[(i + 3) % 6];
  }
  auto w = cond.kernel();
  REQUIRE(w.size() == 4);
  std::vector<MultiPoly> cvars;
  for (int i = 0; i < 4; ++i) cvars.push_back(MultiPoly::variable(4, i));
  MultiPoly klein_c(4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      Scalar om = omega(std::span<const Scalar>(w[i]), std::span<const Scalar>(w[j]));
      if (!om.is_zero()) klein_c += (cvars[i] * cvars[j]).scaled(om);
    }
  auto cpts = sample_surface_points(klein_c, 8, 7);
  CHECK(cpts.size() >= 4);
  for (const auto& cp : cpts) {
    std::array<Scalar, 6> lv{};
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 6; ++j) lv[j] += cp[i] * w[i][j];
    PlueckerLine sample(lv);
    // meeting the Gaussian directrices a ± i a' decomposes into the two
    // pencil incidences, which stay inside the sample's own tower
    CHECK(ga.eval(sample).is_zero());
    CHECK(gb.eval(sample).is_zero());
  }

  // identically special pencil is rejected
  LinearComplex s1({Scalar(1), Scalar(), Scalar(), Scalar(), Scalar(), Scalar()});
  LinearComplex s2({Scalar(), Scalar(1), Scalar(), Scalar(), Scalar(), Scalar()});
  CHECK_THROWS_AS(congruence_directrices(Congruence(s1, s2)), GeometryError);
}
