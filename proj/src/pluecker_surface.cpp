#include "linegeo/pluecker_surface.hpp"

#include "linegeo/numeric.hpp"

namespace linegeo {

PlanePencil plane_pencil(const PlueckerLine& g) {
  PlanePencil out{g,
                  Plane3(Scalar(1), Scalar(), Scalar(), Scalar()),
                  Plane3(Scalar(1), Scalar(), Scalar(), Scalar()),
                  Point3(Scalar(1), Scalar(), Scalar(), Scalar()),
                  Point3(Scalar(1), Scalar(), Scalar(), Scalar()),
                  Point3(Scalar(1), Scalar(), Scalar(), Scalar()),
                  Point3(Scalar(1), Scalar(), Scalar(), Scalar())};
  auto [a, b] = line_span_points(g);
  auto [pi0, pi1] = line_span_planes(g);
  out.a = a;
  out.b = b;
  out.pi0 = pi0;
  out.pi1 = pi1;

  // complete (a, b) with a coordinate line skew to g, so that neither pencil
  // plane contains both completion points: e_i ^ e_j skew to g means the
  // corresponding dual coordinate of g is nonzero
  static const int pr[6][2] = {{0, 1}, {0, 2}, {0, 3}, {2, 3}, {3, 1}, {1, 2}};
  int pair_idx = -1;
  for (int k = 0; k < 6; ++k)
    if (!g[(k + 3) % 6].is_zero()) {
      pair_idx = k;
      break;
    }
  if (pair_idx < 0) throw GeometryError("plane_pencil: degenerate line");
  std::array<Scalar, 4> ev{}, fv{};
  ev[pr[pair_idx][0]] = Scalar(1);
  fv[pr[pair_idx][1]] = Scalar(1);
  const Point3 e{ev};
  const Point3 f{fv};

  // D(t) = -(pi0.F + t pi1.F) E + (pi0.E + t pi1.E) F lies in pi(t)
  Scalar p0e = incidence(pi0, e), p1e = incidence(pi1, e);
  Scalar p0f = incidence(pi0, f), p1f = incidence(pi1, f);
  std::array<Scalar, 4> d0, d1;
  for (int i = 0; i < 4; ++i) {
    d0[i] = -p0f * e[i] + p0e * f[i];
    d1[i] = -p1f * e[i] + p1e * f[i];
  }
  out.d0 = Point3(d0);
  out.d1 = Point3(d1);
  return out;
}

namespace {

// columns of the map u -> line in the plane with frame coefficients u:
// line(u) = u0 B^D - u1 A^D + u2 A^B
std::array<PlueckerLine, 3> frame_line_basis(const std::array<Point3, 3>& fr) {
  return {line_from_points(fr[1], fr[2]), line_from_points(fr[0], fr[2]),
          line_from_points(fr[0], fr[1])};
}

}  // namespace

PlueckerLine frame_line(const std::array<Point3, 3>& frame, std::span<const Scalar> u) {
  auto basis = frame_line_basis(frame);
  std::array<Scalar, 6> acc{};
  const Scalar sign[3] = {Scalar(1), Scalar(-1), Scalar(1)};
  for (int k = 0; k < 3; ++k)
    for (int i = 0; i < 6; ++i) acc[i] += sign[k] * u[k] * basis[k].coords()[i];
  return PlueckerLine(acc);
}

ConicEnvelope complex_conic_in_plane(const QuadraticComplex& k2, const Plane3& pi) {
  // three spanning points of the plane
  Matrix cond(1, 4);
  for (int i = 0; i < 4; ++i) cond.at(0, i) = pi[i];
  auto ker = cond.kernel();
  if (ker.size() != 3) throw GeometryError("complex_conic_in_plane: degenerate plane");
  std::array<Point3, 3> frame = {
      Point3(ker[0][0], ker[0][1], ker[0][2], ker[0][3]),
      Point3(ker[1][0], ker[1][1], ker[1][2], ker[1][3]),
      Point3(ker[2][0], ker[2][1], ker[2][2], ker[2][3])};

  auto basis = frame_line_basis(frame);
  const Scalar sign[3] = {Scalar(1), Scalar(-1), Scalar(1)};
  Matrix q(3, 3);
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) {
      Scalar acc;
      for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j)
          acc += basis[r].coords()[i] * k2.form().at(i, j) * basis[c].coords()[j];
      q.at(r, c) = sign[r] * sign[c] * acc;
    }
  ConicEnvelope out{q.rank(), frame, q, q.adjugate()};
  return out;
}

ComplexSurface complex_surface(const QuadraticComplex& k2, const PlueckerLine& g) {
  PlanePencil pencil = plane_pencil(g);

  // wedge of the symbolic point with the two base points of g
  auto wedge_sym = [](const Point3& p) {
    static const int pr[6][2] = {{0, 1}, {0, 2}, {0, 3}, {2, 3}, {3, 1}, {1, 2}};
    std::vector<MultiPoly> rows;
    for (auto [i, j] : pr) {
      MultiPoly r(4);
      r += MultiPoly::variable(4, i).scaled(p[j]);
      r -= MultiPoly::variable(4, j).scaled(p[i]);
      rows.push_back(r);
    }
    return rows;
  };
  auto l1 = wedge_sym(pencil.a);
  auto l2 = wedge_sym(pencil.b);
  const Matrix& a = k2.form();
  auto pair_form = [&](const std::vector<MultiPoly>& u, const std::vector<MultiPoly>& v) {
    MultiPoly acc(4);
    for (int i = 0; i < 6; ++i) {
      if (u[i].is_zero()) continue;
      for (int j = 0; j < 6; ++j) {
        if (a.at(i, j).is_zero() || v[j].is_zero()) continue;
        acc += (u[i] * v[j]).scaled(a.at(i, j));
      }
    }
    return acc;
  };
  MultiPoly s11 = pair_form(l1, l1);
  MultiPoly s12 = pair_form(l1, l2);
  MultiPoly s22 = pair_form(l2, l2);
  MultiPoly f = s12 * s12 - s11 * s22;
  if (f.is_zero())
    throw GeometryError("complex_surface: surface degenerates (F identically zero)");
  f = f.primitive();

  // conic family over the pencil: line form in the frame (A, B, D(t))
  std::vector<std::vector<UniPoly>> family(3, std::vector<UniPoly>(3));
  {
    // frame lines with D(t) split into d0 + t d1
    auto wedge_pts = [](const Point3& p, const Point3& q) {
      return line_from_points(p, q).coords();
    };
    // B^D(t), A^D(t) as linear polynomials in t per coordinate
    std::array<UniPoly, 6> bd, ad, ab;
    auto bd0 = wedge_pts(pencil.b, pencil.d0), bd1 = wedge_pts(pencil.b, pencil.d1);
    auto ad0 = wedge_pts(pencil.a, pencil.d0), ad1 = wedge_pts(pencil.a, pencil.d1);
    auto abv = wedge_pts(pencil.a, pencil.b);
    for (int i = 0; i < 6; ++i) {
      bd[i] = UniPoly({bd0[i], bd1[i]});
      ad[i] = UniPoly({ad0[i], ad1[i]});
      ab[i] = UniPoly({abv[i]});
    }
    const std::array<std::array<UniPoly, 6>*, 3> cols = {&bd, &ad, &ab};
    const Scalar sign[3] = {Scalar(1), Scalar(-1), Scalar(1)};
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) {
        UniPoly acc;
        for (int i = 0; i < 6; ++i)
          for (int j = 0; j < 6; ++j) {
            if (a.at(i, j).is_zero()) continue;
            acc = acc + ((*cols[r])[i] * (*cols[c])[j]).scaled(a.at(i, j));
          }
        family[r][c] = acc.scaled(sign[r] * sign[c]);
      }
  }

  return ComplexSurface{std::move(f), g, std::move(pencil), k2.contains(g),
                        std::move(family)};
}

PinchPointResult pinch_points(const ComplexSurface& s) {
  // expand F(t0 A + t1 B + u U + v V) and collect the (u, v)-quadratic part
  const Point3 &a = s.pencil.a, &b = s.pencil.b;
  // transverse directions: reuse the frame completion of the pencil
  const Point3 &u = s.pencil.d0, &v = s.pencil.d1;

  std::vector<MultiPoly> subst;  // into variables (t0, t1, u, v) of arity 4
  for (int i = 0; i < 4; ++i) {
    MultiPoly comp(4);
    comp += MultiPoly::variable(4, 0).scaled(a[i]);
    comp += MultiPoly::variable(4, 1).scaled(b[i]);
    comp += MultiPoly::variable(4, 2).scaled(u[i]);
    comp += MultiPoly::variable(4, 3).scaled(v[i]);
    subst.push_back(comp);
  }
  MultiPoly expanded = s.f.substitute(subst);

  // decompose by (u, v)-degree
  UniPoly c20, c11, c02;
  bool lower_order = false;
  for (const auto& [e, coeff] : expanded.terms()) {
    int du = e[2], dv = e[3];
    int transverse_deg = du + dv;
    if (transverse_deg < 2) {
      lower_order = true;
      continue;
    }
    if (transverse_deg > 2) continue;
    // e[1] is the t-exponent after dehomogenizing t0 = 1
    auto bump = [&](UniPoly& p) {
      std::vector<Scalar> cs(p.coeffs());
      if (static_cast<int>(cs.size()) <= e[1]) cs.resize(e[1] + 1);
      cs[e[1]] += coeff;
      p = UniPoly(std::move(cs));
    };
    if (du == 2) bump(c20);
    if (du == 1 && dv == 1) bump(c11);
    if (dv == 2) bump(c02);
  }
  if (lower_order)
    throw GeometryError("pinch_points: surface does not vanish doubly on the line");

  UniPoly disc = c11 * c11 - (c20 * c02).scaled(Scalar(4));
  if (disc.is_zero())
    throw GeometryError("pinch_points: discriminant vanishes identically");

  PinchPointResult out;
  out.discriminant = disc;
  out.infinity_multiplicity = 4 - disc.degree();
  out.c20 = c20;
  out.c11 = c11;
  out.c02 = c02;
  out.transverse = {u, v};
  out.total_multiplicity = out.infinity_multiplicity;
  if (out.infinity_multiplicity > 0) {
    PinchPoint p;
    p.at_infinity = true;
    p.root.kind = RootInfo::Kind::Exact;
    p.root.multiplicity = out.infinity_multiplicity;
    out.points.push_back(p);
  }
  for (const auto& ri : isolate_roots(disc)) {
    PinchPoint p;
    p.at_infinity = false;
    p.root = ri;
    out.points.push_back(p);
    out.total_multiplicity += ri.multiplicity;
  }
  return out;
}

bool restriction_has_double_root(const MultiPoly& f, const Point3& a, const Point3& b) {
  std::vector<MultiPoly> line;
  for (int i = 0; i < 4; ++i)
    line.push_back(MultiPoly::constant(1, a[i]) + MultiPoly::variable(1, 0).scaled(b[i]));
  UniPoly rest = UniPoly::from_multipoly(f.substitute(line));
  if (rest.is_zero()) return true;  // line on the surface
  int drop = f.degree() - rest.degree();  // multiplicity of the root at b
  if (drop >= 2) return true;
  return gcd(rest, rest.derivative()).degree() > 0;
}

int count_nodes_off_line(const ComplexSurface& s, uint64_t seed) {
  NodeSearchOptions opt;
  opt.seed = seed;
  opt.probe_dimension = false;  // the double line itself is singular
  auto res = find_nodes_numeric(s.f, opt);
  // drop points on g: they satisfy both pencil plane equations... a point is
  // on g iff it is in the span of a and b
  auto on_line = [&](const std::array<Cx, 4>& x) {
    // rank of [a; b; x] stays 2
    std::array<Cx, 4> av, bv;
    double na = 0, nb = 0;
    for (int i = 0; i < 4; ++i) {
      av[i] = s.pencil.a[i].to_complex();
      bv[i] = s.pencil.b[i].to_complex();
      na = std::max(na, std::abs(av[i]));
      nb = std::max(nb, std::abs(bv[i]));
    }
    for (int i = 0; i < 4; ++i) {
      av[i] /= na;
      bv[i] /= nb;
    }
    double worst = 0;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        for (int k = j + 1; k < 4; ++k) {
          Cx det = av[i] * (bv[j] * x[k] - bv[k] * x[j]) -
                   av[j] * (bv[i] * x[k] - bv[k] * x[i]) +
                   av[k] * (bv[i] * x[j] - bv[j] * x[i]);
          worst = std::max(worst, std::abs(det));
        }
    return worst < 1e-5;
  };
  int count = 0;
  for (const auto& n : res.nodes)
    if (!on_line(n.x) && n.hessian_det > 1e-6) ++count;
  return count;
}

}  // namespace linegeo
