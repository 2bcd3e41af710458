#include "doctest.h"
#include "linegeo/complexes.hpp"
#include "linegeo/kummer.hpp"
#include "linegeo/sampling.hpp"
#include "linegeo/steiner.hpp"

using namespace linegeo;

TEST_CASE("class formula") {
  CHECK(class_formula(4, 16) == 4);
  CHECK(class_formula(4, 0) == 36);
  CHECK(class_formula(3, 0) == 12);
  // each added node drops the class by two
  for (long d = 0; d < 16; ++d)
    CHECK(class_formula(4, d) - class_formula(4, d + 1) == 2);
  CHECK_THROWS(class_formula(1, 0));
}

TEST_CASE("kummer fixture: sixteen nodes with tiny residuals") {
  auto d = QuadraticComplex::diagonal(
      {Scalar(1), Scalar(2), Scalar(3), Scalar(4), Scalar(5), Scalar(6)});
  MultiPoly k = singularity_surface(d);
  auto nodes = find_nodes(k);
  CHECK(nodes.size() == 16);
  for (const auto& n : nodes) CHECK(n.residual < 1e-12);
  // complex nodes come in conjugate pairs
  int complex_count = 0;
  for (const auto& n : nodes)
    if (!n.real) ++complex_count;
  CHECK(complex_count % 2 == 0);
  // the count matches the paper's class computation k = 4*9 - 2*16 = 4
  CHECK(class_formula(4, static_cast<long>(nodes.size())) == 4);
}

TEST_CASE("positive-dimensional singular locus is signaled") {
  auto s = roman_surface();
  CHECK_THROWS_AS(find_nodes(s.f), GeometryError);
}

TEST_CASE("smooth quartic has no nodes") {
  MultiPoly fermat(4);
  for (int i = 0; i < 4; ++i) {
    Exponents e(4, 0);
    e[i] = 4;
    fermat += MultiPoly::monomial(4, e, Scalar(1));
  }
  CHECK(find_nodes(fermat).empty());
}

TEST_CASE("sixteen tropes in a (16,6) configuration") {
  auto d = QuadraticComplex::diagonal(
      {Scalar(1), Scalar(2), Scalar(3), Scalar(4), Scalar(5), Scalar(6)});
  MultiPoly kq = singularity_surface(d);
  auto k = analyze_kummer(kq);
  REQUIRE(k.nodes.size() == 16);
  CHECK(k.tropes.size() == 16);
  for (const auto& t : k.tropes) {
    CHECK(t.node_indices.size() == 6);
    CHECK(t.square_residual < 1e-9);
  }
  auto cfg = configuration_check(k);
  CHECK(cfg.ok);
  for (int s : cfg.row_sums) CHECK(s == 6);
  for (int s : cfg.col_sums) CHECK(s == 6);
}

TEST_CASE("perturbed surface fails the configuration") {
  auto d = QuadraticComplex::diagonal(
      {Scalar(1), Scalar(2), Scalar(3), Scalar(4), Scalar(5), Scalar(6)});
  MultiPoly kq = singularity_surface(d);
  Exponents e(4, 0);
  e[0] = 4;
  kq += MultiPoly::monomial(4, e, Scalar(1, 1000));
  // the nodes disappear; downstream checks report the failure
  auto nodes = find_nodes(kq);
  CHECK(nodes.size() < 16);
  KummerSurface broken{kq, nodes, {}, {}};
  auto cfg = configuration_check(broken);
  CHECK(!cfg.ok);
  CHECK(!cfg.failure.empty());
}

TEST_CASE("fresnel wave surface has four real nodes in the y = 0 plane") {
  auto f = fresnel_surface(mpq_class(4), mpq_class(2), mpq_class(1));
  // coordinate sign symmetry
  std::vector<MultiPoly> flip;
  for (int i = 0; i < 4; ++i)
    flip.push_back(MultiPoly::variable(4, i).scaled(Scalar(i == 1 ? -1 : 1)));
  CHECK(f.f.substitute(flip) == f.f);

  auto nodes = fresnel_real_nodes(f);
  REQUIRE(nodes.size() == 4);
  for (const auto& n : nodes) {
    CHECK(n.residual < 1e-12);
    CHECK(std::abs(n.x[1]) < 1e-9);  // y = 0 by symmetry
  }
  CHECK_THROWS(fresnel_surface(mpq_class(2), mpq_class(2), mpq_class(1)));
}

TEST_CASE("fresnel: four real nodes across random ordered parameter triples") {
  RationalSeq seq(51);
  int done = 0;
  while (done < 5) {
    long a = seq.next_int(2, 12), b = seq.next_int(2, 12), c = seq.next_int(1, 12);
    if (!(a > b && b > c)) continue;
    auto f = fresnel_surface(mpq_class(a), mpq_class(b), mpq_class(c));
    auto nodes = fresnel_real_nodes(f);
    CHECK(nodes.size() == 4);
    for (const auto& n : nodes) CHECK(n.residual < 1e-12);
    ++done;
  }
}

TEST_CASE("fresnel singular planes touch along circles") {
  auto f = fresnel_surface(mpq_class(4), mpq_class(2), mpq_class(1));
  auto planes = fresnel_singular_planes(f);
  REQUIRE(planes.size() == 4);
  for (const auto& p : planes) {
    CHECK(p.square_residual < 1e-9);
    CHECK(p.circle_residual < 1e-9);
    CHECK(p.plane[1] == 0);  // normals lie in the x-z plane
  }
}
