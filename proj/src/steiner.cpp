#include "linegeo/steiner.hpp"

#include "linegeo/sampling.hpp"
#include "linegeo/unipoly.hpp"

namespace linegeo {

SteinerSurface roman_surface() {
  auto x0 = MultiPoly::variable(4, 0), x1 = MultiPoly::variable(4, 1);
  auto x2 = MultiPoly::variable(4, 2), x3 = MultiPoly::variable(4, 3);
  MultiPoly f = x1 * x1 * x2 * x2 + x2 * x2 * x0 * x0 + x0 * x0 * x1 * x1 -
                x0 * x1 * x2 * x3;
  auto a = MultiPoly::variable(3, 0), b = MultiPoly::variable(3, 1),
       c = MultiPoly::variable(3, 2);
  std::array<MultiPoly, 4> phi = {b * c, c * a, a * b, a * a + b * b + c * c};

  Point3 e0(Scalar(1), Scalar(), Scalar(), Scalar());
  Point3 e1(Scalar(), Scalar(1), Scalar(), Scalar());
  Point3 e2(Scalar(), Scalar(), Scalar(1), Scalar());
  Point3 e3(Scalar(), Scalar(), Scalar(), Scalar(1));
  return SteinerSurface{f, phi, e3,
                        {line_from_points(e0, e3), line_from_points(e1, e3),
                         line_from_points(e2, e3)}};
}

Point3 steiner_image(const SteinerSurface& s, const Param& u) {
  std::array<Scalar, 4> x;
  bool nonzero = false;
  for (int i = 0; i < 4; ++i) {
    x[i] = s.phi[i].eval(std::span<const Scalar>(u));
    nonzero |= !x[i].is_zero();
  }
  if (!nonzero) throw GeometryError("steiner_image: base point of the parameterization");
  return Point3(x);
}

Plane3 tangent_plane(const SteinerSurface& s, const Param& u) {
  Point3 p = steiner_image(s, u);
  std::array<Scalar, 4> pv = p.v, grad;
  bool nonzero = false;
  for (int i = 0; i < 4; ++i) {
    grad[i] = s.f.derivative(i).eval(std::span<const Scalar>(pv));
    nonzero |= !grad[i].is_zero();
  }
  if (!nonzero) throw GeometryError("tangent_plane: singular image point");
  return Plane3(grad);
}

namespace {

// frame coordinates of a point lying in the plane spanned by the frame
std::array<Scalar, 3> frame_coords(const std::array<Point3, 3>& frame, const Point3& x) {
  // pick three rows with an invertible 3x3 frame block
  for (int skip = 3; skip >= 0; --skip) {
    Matrix m(3, 3);
    std::array<Scalar, 3> rhs;
    int rr = 0;
    for (int r = 0; r < 4; ++r) {
      if (r == skip) continue;
      for (int c = 0; c < 3; ++c) m.at(rr, c) = frame[c][r];
      rhs[rr] = x[r];
      ++rr;
    }
    if (m.det().is_zero()) continue;
    auto sol = m.solve(std::span<const Scalar>(rhs.data(), 3));
    // consistency on the skipped row
    Scalar check;
    for (int c = 0; c < 3; ++c) check += frame[c][skip] * sol[c];
    if (check != x[skip])
      throw GeometryError("frame_coords: point not in the plane");
    return {sol[0], sol[1], sol[2]};
  }
  throw GeometryError("frame_coords: degenerate frame");
}

// conic through five points in frame coordinates, exact over the tower
Matrix conic_through(const std::vector<std::array<Scalar, 3>>& pts, int* rank_out) {
  auto monos = monomials_of_degree(3, 2);  // 6 monomials
  Matrix m(static_cast<int>(pts.size()), 6);
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < 6; ++c) {
      Scalar v(1);
      for (int var = 0; var < 3; ++var)
        for (int k = 0; k < monos[c][var]; ++k) v *= pts[r][var];
      m.at(r, c) = v;
    }
  auto ker = m.kernel();
  if (ker.size() != 1)
    throw GeometryError("conic_through: interpolation kernel not one-dimensional");
  // assemble the symmetric matrix
  Matrix conic(3, 3);
  for (int c = 0; c < 6; ++c) {
    const auto& e = monos[c];
    int i = -1, j = -1;
    for (int var = 0; var < 3; ++var) {
      if (e[var] == 2) i = j = var;
      if (e[var] == 1) (i < 0 ? i : j) = var;
    }
    if (i == j)
      conic.at(i, i) = ker[0][c];
    else {
      conic.at(i, j) = ker[0][c] / Scalar(2);
      conic.at(j, i) = conic.at(i, j);
    }
  }
  if (rank_out) *rank_out = conic.rank();
  return conic;
}

}  // namespace

TangentSplit tangent_section_split(const SteinerSurface& s, const Param& u) {
  Plane3 t = tangent_plane(s, u);

  // pull the tangent plane back through the parameterization
  MultiPoly pulled(3);
  for (int i = 0; i < 4; ++i) pulled += s.phi[i].scaled(t[i]);
  Matrix g(3, 3);
  for (const auto& [e, c] : pulled.terms()) {
    int i = -1, j = -1;
    for (int var = 0; var < 3; ++var) {
      if (e[var] == 2) i = j = var;
      if (e[var] == 1) (i < 0 ? i : j) = var;
    }
    if (i == j)
      g.at(i, i) = c;
    else {
      g.at(i, j) = c / Scalar(2);
      g.at(j, i) = g.at(i, j);
    }
  }
  auto split = rank2_split(g);  // throws on rank 3

  // rational frame of the tangent plane
  Matrix cond(1, 4);
  for (int i = 0; i < 4; ++i) cond.at(0, i) = t[i];
  auto ker = cond.kernel();
  std::array<Point3, 3> frame = {
      Point3(ker[0][0], ker[0][1], ker[0][2], ker[0][3]),
      Point3(ker[1][0], ker[1][1], ker[1][2], ker[1][3]),
      Point3(ker[2][0], ker[2][1], ker[2][2], ker[2][3])};

  // each split line maps to a conic in the tangent plane: interpolate it
  // through five parameter points of the line
  auto conic_of_line = [&](std::span<const Scalar> line) {
    Matrix lc(1, 3);
    for (int i = 0; i < 3; ++i) lc.at(0, i) = line[i];
    auto lk = lc.kernel();
    if (lk.size() != 2) throw GeometryError("tangent_section_split: bad line");
    std::vector<std::array<Scalar, 3>> pts;
    long sval = 0;
    while (static_cast<int>(pts.size()) < 5 && sval < 40) {
      Scalar sv(sval++);
      Param w;
      bool nonzero = false;
      for (int i = 0; i < 3; ++i) {
        w[i] = lk[0][i] + sv * lk[1][i];
        nonzero |= !w[i].is_zero();
      }
      if (!nonzero) continue;
      Point3 img(Scalar(1), Scalar(), Scalar(), Scalar());
      try {
        img = steiner_image(s, w);
      } catch (const GeometryError&) {
        continue;
      }
      auto fc = frame_coords(frame, img);
      bool dup = false;
      for (const auto& q : pts) {
        // projective duplicate check
        int piv = -1;
        for (int i = 0; i < 3 && piv < 0; ++i)
          if (!q[i].is_zero()) piv = i;
        bool same = true;
        for (int i = 0; i < 3; ++i) same &= (fc[i] * q[piv] == q[i] * fc[piv]);
        dup |= same;
      }
      if (!dup) pts.push_back(fc);
    }
    if (static_cast<int>(pts.size()) < 5)
      throw GeometryError("tangent_section_split: not enough conic samples");
    int rank = 0;
    Matrix conic = conic_through(pts, &rank);
    mpz_class delta = 0;
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c)
        if (!conic.at(r, c).is_rational()) delta = conic.at(r, c).delta();
    return ConicInPlane{t, frame, conic, rank, delta};
  };

  TangentSplit out{t, u, conic_of_line(split.l1), conic_of_line(split.l2), split.delta};
  return out;
}

SweepResult lie_sweep(const SteinerSurface& s, const Plane3& plane, int count,
                      uint64_t seed) {
  SweepResult out;
  RationalSeq seq(seed);
  int guard = 0;
  while (static_cast<int>(out.samples.size()) < count && guard++ < count * 40) {
    Param u{Scalar(seq.next_nonzero()), Scalar(seq.next_nonzero()),
            Scalar(seq.next_nonzero())};
    TangentSplit split{Plane3(Scalar(1), Scalar(), Scalar(), Scalar()), u,
                       ConicInPlane{}, ConicInPlane{}, 0};
    try {
      split = tangent_section_split(s, u);
    } catch (const GeometryError& e) {
      out.skipped.push_back(std::string("sample skipped: ") + e.what());
      continue;
    }
    if (split.plane == plane) {
      out.skipped.push_back("sample skipped: plane tangent at this sample");
      continue;
    }
    if (split.c1.rank < 3 || split.c2.rank < 3) {
      out.skipped.push_back("sample skipped: rank-deficient conic (polarity undefined)");
      continue;
    }
    // polar line of the sample: plane ∩ tangent plane in frame coordinates
    std::array<Scalar, 3> lc;
    for (int i = 0; i < 3; ++i) {
      lc[i] = Scalar();
      for (int j = 0; j < 4; ++j) lc[i] += plane[j] * split.c1.frame[i][j];
    }
    auto pole_of = [&](const ConicInPlane& conic) {
      auto adj = conic.m.adjugate();
      std::array<Scalar, 4> pv{};
      for (int i = 0; i < 3; ++i) {
        Scalar coord;
        for (int j = 0; j < 3; ++j) coord += adj.at(i, j) * lc[j];
        for (int k = 0; k < 4; ++k) pv[k] += coord * conic.frame[i][k];
      }
      return Point3(pv);
    };
    PoleSample ps{u, split.plane, pole_of(split.c1), pole_of(split.c2), split.delta};
    out.branch1.push_back(ps.pole1);
    out.branch2.push_back(ps.pole2);
    out.poles.push_back(ps.pole1);
    out.poles.push_back(ps.pole2);
    out.samples.push_back(std::move(ps));
  }
  return out;
}

}  // namespace linegeo
