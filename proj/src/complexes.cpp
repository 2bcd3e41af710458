#include "linegeo/complexes.hpp"

#include "linegeo/sampling.hpp"
#include "linegeo/unipoly.hpp"

namespace linegeo {

LinearComplex::LinearComplex(std::array<Scalar, 6> coeffs) : a(std::move(coeffs)) {
  bool nonzero = false;
  for (const auto& c : a) nonzero |= !c.is_zero();
  if (!nonzero) throw GeometryError("LinearComplex: zero covector");
}

Scalar LinearComplex::eval(const PlueckerLine& l) const {
  return omega(std::span<const Scalar>(a), std::span<const Scalar>(l.coords()));
}

bool LinearComplex::is_special() const {
  return omega(std::span<const Scalar>(a), std::span<const Scalar>(a)).is_zero();
}

PlueckerLine LinearComplex::axis() const {
  if (!is_special()) throw GeometryError("LinearComplex: axis of a non-special complex");
  return PlueckerLine(a);
}

QuadraticComplex::QuadraticComplex(const Matrix& a) {
  if (a.rows() != 6 || a.cols() != 6)
    throw std::invalid_argument("QuadraticComplex: expected 6x6");
  // symmetrize, then remove the Klein-form component (trace normalization)
  Matrix sym = (a + a.transposed()).scaled(Scalar(1, 2));
  Scalar ktrace;
  for (int i = 0; i < 3; ++i) ktrace += sym.at(i, i + 3) + sym.at(i + 3, i);
  a_ = sym - klein_matrix().scaled(ktrace / Scalar(6));
  bool nonzero = false;
  for (int r = 0; r < 6; ++r)
    for (int c = 0; c < 6; ++c) nonzero |= !a_.at(r, c).is_zero();
  if (!nonzero)
    throw GeometryError("QuadraticComplex: form proportional to the Klein quadric");
}

Scalar QuadraticComplex::eval_raw(std::span<const Scalar> p) const {
  Scalar acc;
  for (int r = 0; r < 6; ++r) {
    if (p[r].is_zero()) continue;
    for (int c = 0; c < 6; ++c) acc += p[r] * a_.at(r, c) * p[c];
  }
  return acc;
}

Scalar QuadraticComplex::eval(const PlueckerLine& l) const {
  return eval_raw(std::span<const Scalar>(l.coords()));
}

QuadraticComplex QuadraticComplex::diagonal(const std::array<Scalar, 6>& lambda) {
  // u = T p with u1 = p01+p23, u2 = p01-p23, etc.
  Matrix t(6, 6);
  for (int b = 0; b < 3; ++b) {
    t.at(2 * b, b) = Scalar(1);
    t.at(2 * b, b + 3) = Scalar(1);
    t.at(2 * b + 1, b) = Scalar(1);
    t.at(2 * b + 1, b + 3) = Scalar(-1);
  }
  Matrix d(6, 6);
  for (int i = 0; i < 6; ++i) d.at(i, i) = lambda[i];
  return QuadraticComplex(t.transposed() * d * t);
}

QuadraticComplex QuadraticComplex::tetrahedral(const Scalar& mu1, const Scalar& mu2,
                                               const Scalar& mu3) {
  Matrix a(6, 6);
  const Scalar half(1, 2);
  a.at(0, 3) = a.at(3, 0) = mu1 * half;
  a.at(1, 4) = a.at(4, 1) = mu2 * half;
  a.at(2, 5) = a.at(5, 2) = mu3 * half;
  return QuadraticComplex(a);
}

TetrahedralComplex::TetrahedralComplex(std::array<Scalar, 3> m) : mu(std::move(m)) {
  if (mu[0] == mu[1] && mu[1] == mu[2])
    throw GeometryError("TetrahedralComplex: all pencil coefficients equal");
}

Scalar TetrahedralComplex::eval(const PlueckerLine& l) const {
  const auto& p = l.coords();
  return mu[0] * p[0] * p[3] + mu[1] * p[1] * p[4] + mu[2] * p[2] * p[5];
}

QuadraticComplex TetrahedralComplex::quadratic() const {
  return QuadraticComplex::tetrahedral(mu[0], mu[1], mu[2]);
}

PlueckerLine TetrahedralComplex::sample_member() const {
  // (X, Y, Z) = (mu2-mu3, mu3-mu1, mu1-mu2) satisfies mu.(X,Y,Z) = 0 and
  // X+Y+Z = 0, so (X, Y, Z, 1, 1, 1) is a member line.
  Scalar x = mu[1] - mu[2], y = mu[2] - mu[0], z = mu[0] - mu[1];
  return PlueckerLine(std::array<Scalar, 6>{x, y, z, Scalar(1), Scalar(1), Scalar(1)});
}

Scalar TetrahedralComplex::fixed_cross_ratio() const {
  return tetra_cross_ratio(sample_member());
}

Matrix wedge_with(const Point3& p) {
  static const int pr[6][2] = {{0, 1}, {0, 2}, {0, 3}, {2, 3}, {3, 1}, {1, 2}};
  Matrix b(6, 4);
  for (int row = 0; row < 6; ++row) {
    int i = pr[row][0], j = pr[row][1];
    b.at(row, j) += p[i];
    b.at(row, i) -= p[j];
  }
  return b;
}

Matrix complex_cone(const QuadraticComplex& k2, const Point3& p) {
  Matrix b = wedge_with(p);
  return b.transposed() * k2.form() * b;
}

MultiPoly singularity_surface(const QuadraticComplex& k2) {
  // symbolic cone matrix: entries quadratic in the point coordinates
  const int n = 4;
  static const int pr[6][2] = {{0, 1}, {0, 2}, {0, 3}, {2, 3}, {3, 1}, {1, 2}};
  std::vector<MultiPoly> x;
  for (int i = 0; i < n; ++i) x.push_back(MultiPoly::variable(n, i));

  // rows of the wedge map as linear polynomials in P
  std::vector<std::vector<MultiPoly>> b(6, std::vector<MultiPoly>(4, MultiPoly(n)));
  for (int row = 0; row < 6; ++row) {
    int i = pr[row][0], j = pr[row][1];
    b[row][j] += x[i];
    b[row][i] -= x[j];
  }
  std::vector<std::vector<MultiPoly>> m(4, std::vector<MultiPoly>(4, MultiPoly(n)));
  const Matrix& a = k2.form();
  for (int r = 0; r < 4; ++r)
    for (int c = r; c < 4; ++c) {
      MultiPoly acc(n);
      for (int i = 0; i < 6; ++i) {
        if (b[i][r].is_zero()) continue;
        for (int j = 0; j < 6; ++j) {
          if (a.at(i, j).is_zero() || b[j][c].is_zero()) continue;
          acc += (b[i][r] * b[j][c]).scaled(a.at(i, j));
        }
      }
      m[r][c] = acc;
      if (c != r) m[c][r] = acc;
    }

  // diagonal cofactors are K(P) * P_i^2; divide out the chart factor and
  // cross-check a second chart
  std::optional<MultiPoly> surface;
  int checked = 0;
  for (int i = 0; i < 4 && checked < 2; ++i) {
    std::vector<std::vector<MultiPoly>> sub(3, std::vector<MultiPoly>(3, MultiPoly(n)));
    int rr = 0;
    for (int r = 0; r < 4; ++r) {
      if (r == i) continue;
      int cc = 0;
      for (int c = 0; c < 4; ++c) {
        if (c == i) continue;
        sub[rr][cc] = m[r][c];
        ++cc;
      }
      ++rr;
    }
    MultiPoly cof = poly_det(sub);
    if (cof.is_zero()) continue;
    auto quo = cof.divide_exact(x[i] * x[i]);
    if (!quo) throw GeometryError("singularity_surface: chart division failed");
    if (!surface) {
      surface = *quo;
    } else if (*surface != *quo) {
      throw GeometryError("singularity_surface: chart cross-check failed");
    }
    ++checked;
  }
  if (!surface)
    throw GeometryError("singularity_surface: degenerate complex (zero adjugate)");
  return surface->primitive();
}

Scalar tetra_cross_ratio(const PlueckerLine& l) {
  std::array<std::optional<Point3>, 4> q;
  for (int i = 0; i < 4; ++i) {
    std::array<Scalar, 4> e{};
    e[i] = Scalar(1);
    q[i] = meet_line_plane(l, Plane3(e));
    if (!q[i]) throw GeometryError("tetra_cross_ratio: line lies in a face");
  }
  return cross_ratio(*q[0], *q[1], *q[2], *q[3]);
}

PlueckerLine scaling_action(const Scalar& alpha, const Scalar& beta,
                            const Scalar& gamma, const PlueckerLine& l) {
  if (alpha.is_zero() || beta.is_zero() || gamma.is_zero())
    throw std::invalid_argument("scaling_action: zero scale");
  const auto& p = l.coords();
  return PlueckerLine(std::array<Scalar, 6>{
      alpha * p[0], beta * p[1], gamma * p[2],
      beta * gamma * p[3], gamma * alpha * p[4], alpha * beta * p[5]});
}

Congruence::Congruence(LinearComplex first, LinearComplex second)
    : a(std::move(first)), aprime(std::move(second)) {
  // independence
  Matrix m(2, 6);
  for (int i = 0; i < 6; ++i) {
    m.at(0, i) = a.a[i];
    m.at(1, i) = aprime.a[i];
  }
  if (m.rank() < 2) throw GeometryError("Congruence: dependent complexes");
}

Directrices congruence_directrices(const Congruence& c) {
  auto sa = std::span<const Scalar>(c.a.a);
  auto sb = std::span<const Scalar>(c.aprime.a);
  Scalar qaa = omega(sa, sa), qab = omega(sa, sb), qbb = omega(sb, sb);
  if (qaa.is_zero() && qab.is_zero() && qbb.is_zero())
    throw GeometryError("congruence_directrices: identically special pencil");

  auto member = [&](const Scalar& t) {
    std::array<Scalar, 6> v;
    for (int i = 0; i < 6; ++i) v[i] = c.a.a[i] + t * c.aprime.a[i];
    return PlueckerLine(v);
  };

  if (!qbb.is_zero()) {
    auto [t1, t2] = solve_quadratic(qbb, Scalar(2) * qab, qaa);
    return Directrices{member(t1), member(t2), t1 == t2, t1.delta()};
  }
  if (!qab.is_zero()) {
    // one special member at infinity (a'), one affine
    return Directrices{member(-qaa / (Scalar(2) * qab)), PlueckerLine(c.aprime.a),
                       false, 0};
  }
  // a' special and orthogonal to a: doubled directrix at infinity
  PlueckerLine r(c.aprime.a);
  return Directrices{r, r, true, 0};
}

std::vector<PlueckerLine> sample_congruence_lines(const Congruence& c, int want,
                                                  uint64_t seed) {
  // basis of the 4-space cut by the two membership conditions
  Matrix cond(2, 6);
  for (int i = 0; i < 6; ++i) {
    cond.at(0, i) = c.a.a[(i + 3) % 6];  // Omega(a, p) = (dual a) . p
    cond.at(1, i) = c.aprime.a[(i + 3) % 6];
  }
  auto w = cond.kernel();
  if (w.size() != 4)
    throw GeometryError("sample_congruence_lines: degenerate congruence");

  // the Klein form pulled back to the 4-space
  MultiPoly klein_c(4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      Scalar om = omega(std::span<const Scalar>(w[i]), std::span<const Scalar>(w[j]));
      if (!om.is_zero())
        klein_c += (MultiPoly::variable(4, i) * MultiPoly::variable(4, j)).scaled(om);
    }
  std::vector<PlueckerLine> out;
  for (const auto& cp : sample_surface_points(klein_c, want, seed)) {
    std::array<Scalar, 6> lv{};
    bool nonzero = false;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 6; ++j) {
        lv[j] += cp[i] * w[i][j];
        nonzero |= !lv[j].is_zero();
      }
    if (!nonzero) continue;
    out.emplace_back(lv);
  }
  return out;
}

std::vector<Point3> sample_surface_points(const MultiPoly& f, int want, uint64_t seed) {
  if (f.arity() != 4) throw std::invalid_argument("sample_surface_points: arity != 4");
  RationalSeq seq(seed);
  std::vector<Point3> out;
  auto push_unique = [&](const Point3& p) {
    for (const auto& q : out)
      if (q == p) return;
    out.push_back(p);
  };

  for (int attempt = 0; attempt < 4000 && static_cast<int>(out.size()) < want;
       ++attempt) {
    std::array<Scalar, 4> av{}, bv{};
    // every other attempt restricts the line to a coordinate plane
    int zero_at = attempt % 2 == 0 ? static_cast<int>(seq.next_int(0, 3)) : -1;
    bool nza = false, nzb = false;
    for (int i = 0; i < 4; ++i) {
      av[i] = i == zero_at ? Scalar() : Scalar(seq.next_rational());
      bv[i] = i == zero_at ? Scalar() : Scalar(seq.next_rational());
      nza |= !av[i].is_zero();
      nzb |= !bv[i].is_zero();
    }
    if (!nza || !nzb) continue;
    Point3 a(av);
    Point3 b(bv);
    if (a == b) continue;

    // restrict f to a + t b
    std::vector<MultiPoly> line;
    for (int i = 0; i < 4; ++i)
      line.push_back(MultiPoly::constant(1, av[i]) +
                     MultiPoly::variable(1, 0).scaled(bv[i]));
    UniPoly rest = UniPoly::from_multipoly(f.substitute(line));
    if (rest.is_zero()) continue;  // line on the surface; skip for sampling
    for (const auto& [root, mult] : tower_roots(rest)) {
      std::array<Scalar, 4> pv;
      bool nz = false;
      for (int i = 0; i < 4; ++i) {
        pv[i] = av[i] + root * bv[i];
        nz |= !pv[i].is_zero();
      }
      if (!nz) continue;
      push_unique(Point3(pv));
      if (static_cast<int>(out.size()) >= want) break;
    }
  }
  return out;
}

}  // namespace linegeo
