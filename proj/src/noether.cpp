#include "linegeo/noether.hpp"

namespace linegeo {

namespace {

// antisymmetric matrix N with Omega(a, P ^ X) = P^T N X
Matrix null_system(const std::array<Scalar, 6>& a) {
  static const int pr[6][2] = {{0, 1}, {0, 2}, {0, 3}, {2, 3}, {3, 1}, {1, 2}};
  Matrix n(4, 4);
  for (int k = 0; k < 6; ++k) {
    const Scalar& coeff = a[(k + 3) % 6];
    n.at(pr[k][0], pr[k][1]) += coeff;
    n.at(pr[k][1], pr[k][0]) -= coeff;
  }
  return n;
}

std::array<Scalar, 4> coords_in_basis(const std::vector<std::vector<Scalar>>& basis,
                                      std::span<const Scalar> x) {
  // solve the consistent 6x4 system by an invertible 4x4 subblock
  const int n = static_cast<int>(basis.size());
  std::vector<int> rows;
  Matrix probe(0, 0);
  for (int r = 0; r < 6 && static_cast<int>(rows.size()) < n; ++r) {
    rows.push_back(r);
    Matrix test(static_cast<int>(rows.size()), n);
    for (size_t i = 0; i < rows.size(); ++i)
      for (int j = 0; j < n; ++j) test.at(static_cast<int>(i), j) = basis[j][rows[i]];
    if (test.rank() < static_cast<int>(rows.size())) rows.pop_back();
  }
  Matrix m(n, n);
  std::vector<Scalar> rhs(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m.at(i, j) = basis[j][rows[i]];
    rhs[i] = x[rows[i]];
  }
  auto sol = m.solve(rhs);
  // consistency across the remaining rows
  for (int r = 0; r < 6; ++r) {
    Scalar acc;
    for (int j = 0; j < n; ++j) acc += basis[j][r] * sol[j];
    if (acc != x[r]) throw GeometryError("coords_in_basis: point not in the span");
  }
  std::array<Scalar, 4> out{};
  for (int i = 0; i < n; ++i) out[i] = sol[i];
  return out;
}

}  // namespace

NoetherChart::NoetherChart(const LinearComplex& k1)
    : k1_(k1),
      l0_(std::array<Scalar, 6>{Scalar(1), Scalar(), Scalar(), Scalar(), Scalar(),
                                Scalar()}),
      c2_plane_(Scalar(1), Scalar(), Scalar(), Scalar()),
      c2_conic_(3, 3) {
  if (k1.is_special())
    throw GeometryError("NoetherChart: special complex has a degenerate chart");

  // distinguished line: join of e0 with a canonical point of its null plane
  Matrix n = null_system(k1.a);
  Point3 p0(Scalar(1), Scalar(), Scalar(), Scalar());
  auto pi = n.apply(std::span<const Scalar>(p0.v));
  Matrix cond(1, 4);
  for (int i = 0; i < 4; ++i) cond.at(0, i) = pi[i];
  auto ker = cond.kernel();
  std::optional<Point3> y0;
  for (const auto& v : ker) {
    Point3 cand(v[0], v[1], v[2], v[3]);
    if (!(cand == p0)) {
      y0 = cand;
      break;
    }
  }
  l0_ = line_from_points(p0, *y0);
  if (!k1_.contains(l0_)) throw GeometryError("NoetherChart: construction failed");

  // screen: Omega(a, x) = 0 and x[b] = 0 for the first coordinate present
  // in l0
  b_index_ = 0;
  while (l0_[b_index_].is_zero()) ++b_index_;
  Matrix cut(2, 6);
  for (int i = 0; i < 6; ++i) cut.at(0, i) = k1_.a[(i + 3) % 6];
  cut.at(1, b_index_) = Scalar(1);
  frame_ = cut.kernel();
  if (frame_.size() != 4) throw GeometryError("NoetherChart: degenerate screen");

  // plane of C2 inside the screen: Omega(l0, x) = 0
  std::array<Scalar, 4> cp{};
  for (int i = 0; i < 4; ++i)
    cp[i] = omega(std::span<const Scalar>(l0_.coords()), std::span<const Scalar>(frame_[i]));
  c2_plane_ = Plane3(cp);

  Matrix cut3(3, 6);
  for (int i = 0; i < 6; ++i) {
    cut3.at(0, i) = k1_.a[(i + 3) % 6];
    cut3.at(1, i) = (i == b_index_) ? Scalar(1) : Scalar();
    cut3.at(2, i) = l0_[(i + 3) % 6];
  }
  c2_frame_ = cut3.kernel();
  if (c2_frame_.size() != 3) throw GeometryError("NoetherChart: degenerate C2 plane");
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c)
      c2_conic_.at(r, c) = omega(std::span<const Scalar>(c2_frame_[r]),
                                 std::span<const Scalar>(c2_frame_[c]));
}

NoetherChart::Image NoetherChart::forward(const PlueckerLine& l) const {
  if (!k1_.contains(l)) throw GeometryError("noether forward: line not in the complex");
  if (l == l0_)
    throw GeometryError(
        "noether forward: the distinguished line maps to the exceptional plane");
  Scalar bl0 = l0_[b_index_], bl = l[b_index_];
  std::array<Scalar, 6> x;
  for (int i = 0; i < 6; ++i) x[i] = bl0 * l[i] - bl * l0_[i];
  auto coords = coords_in_basis(frame_, std::span<const Scalar>(x.data(), 6));
  Image img{Point3(coords), false};
  img.on_c2 = omega(std::span<const Scalar>(l0_.coords()),
                    std::span<const Scalar>(l.coords()))
                  .is_zero();
  return img;
}

std::vector<Scalar> NoetherChart::lift(const Point3& p) const {
  std::vector<Scalar> x(6);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 4; ++j) x[i] += p[j] * frame_[j][i];
  return x;
}

Point3 NoetherChart::project6(std::span<const Scalar> x) const {
  return Point3(coords_in_basis(frame_, x));
}

PlueckerLine NoetherChart::inverse(const Point3& p) const {
  auto x = lift(p);
  Scalar xl0 = omega(std::span<const Scalar>(x), std::span<const Scalar>(l0_.coords()));
  if (xl0.is_zero())
    throw GeometryError("noether inverse: point on C2 has a pencil preimage");
  Scalar xx = omega(std::span<const Scalar>(x), std::span<const Scalar>(x));
  std::array<Scalar, 6> lv;
  for (int i = 0; i < 6; ++i) lv[i] = Scalar(2) * xl0 * x[i] - xx * l0_[i];
  return PlueckerLine(lv);
}

bool NoetherChart::point_on_c2(const Point3& p) const {
  auto x = lift(p);
  Scalar xl0 = omega(std::span<const Scalar>(x), std::span<const Scalar>(l0_.coords()));
  Scalar xx = omega(std::span<const Scalar>(x), std::span<const Scalar>(x));
  return xl0.is_zero() && xx.is_zero();
}

MultiPoly NoetherChart::restrict_to_c2_plane(const MultiPoly& q) const {
  // frame coordinates of the C2 plane inside the screen
  std::vector<MultiPoly> subst;
  for (int i = 0; i < 4; ++i) {
    MultiPoly comp(3);
    for (int j = 0; j < 3; ++j) {
      auto cj = coords_in_basis(frame_, std::span<const Scalar>(c2_frame_[j]));
      comp += MultiPoly::variable(3, j).scaled(cj[i]);
    }
    subst.push_back(comp);
  }
  return q.substitute(subst);
}

MultiPoly NoetherChart::c2_form() const {
  MultiPoly f(3);
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c)
      if (!c2_conic_.at(r, c).is_zero())
        f += (MultiPoly::variable(3, r) * MultiPoly::variable(3, c))
                 .scaled(c2_conic_.at(r, c));
  return f;
}

Plane3 NoetherChart::meeting_plane(const PlueckerLine& member) const {
  std::array<Scalar, 4> h{};
  for (int i = 0; i < 4; ++i)
    h[i] = omega(std::span<const Scalar>(member.coords()),
                 std::span<const Scalar>(frame_[i]));
  return Plane3(h);
}

bool NoetherChart::plane_tangent_to_c2(const Plane3& h) const {
  // restrict the plane to the conic frame and test the dual conic condition
  std::array<Scalar, 3> u{};
  for (int j = 0; j < 3; ++j) {
    auto cj = coords_in_basis(frame_, std::span<const Scalar>(c2_frame_[j]));
    for (int i = 0; i < 4; ++i) u[j] += h[i] * cj[i];
  }
  Matrix adj = c2_conic_.adjugate();
  Scalar acc;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) acc += u[i] * adj.at(i, j) * u[j];
  return acc.is_zero();
}

NoetherChart::PencilImage NoetherChart::pencil_image(const Scalar& t, int members) const {
  // point of l0 at parameter t and its null plane
  auto [a, b] = line_span_points(l0_);
  std::array<Scalar, 4> pv;
  for (int i = 0; i < 4; ++i) pv[i] = a[i] + t * b[i];
  Point3 p(pv);
  Matrix n = null_system(k1_.a);
  auto pi = n.apply(std::span<const Scalar>(p.v));
  Matrix cond(1, 4);
  for (int i = 0; i < 4; ++i) cond.at(0, i) = pi[i];
  auto ker = cond.kernel();

  // pencil members: p ^ (w_off + c * w_on) with w_on along l0 and w_off a
  // null-plane direction off l0; c parameterizes the pencil minus l0 itself
  Point3 w_on = (a == p) ? b : a;
  std::optional<Point3> w_off;
  for (const auto& kv : ker) {
    Point3 cand(kv[0], kv[1], kv[2], kv[3]);
    if (!point_on_line(cand, l0_)) {
      w_off = cand;
      break;
    }
  }
  if (!w_off) throw GeometryError("pencil_image: degenerate null plane");

  PencilImage out{Point3(Scalar(1), Scalar(), Scalar(), Scalar()), {}};
  bool have_point = false;
  for (long c = 0; static_cast<int>(out.tangent_planes.size()) < members; ++c) {
    std::array<Scalar, 4> yv;
    for (int i = 0; i < 4; ++i) yv[i] = (*w_off)[i] + Scalar(c) * w_on[i];
    Point3 y(yv);
    PlueckerLine member = line_from_points(p, y);
    if (!k1_.contains(member)) throw GeometryError("pencil_image: member escaped K1");
    auto img = forward(member);
    if (!img.on_c2) throw GeometryError("pencil_image: image missed C2");
    if (!have_point) {
      out.contracted = img.p;
      have_point = true;
    } else if (!(img.p == out.contracted)) {
      throw GeometryError("pencil_image: pencil failed to contract");
    }
    out.tangent_planes.push_back(meeting_plane(member));
  }
  return out;
}

CongruenceImage congruence_image(const NoetherChart& ch, const Congruence& c,
                                 int samples, uint64_t seed) {
  CongruenceImage out;
  out.degenerate = c.contains(ch.distinguished_line());
  auto lines = sample_congruence_lines(c, samples, seed);
  for (const auto& l : lines) {
    if (l == ch.distinguished_line()) continue;
    out.samples.push_back(ch.forward(l).p);
  }
  if (static_cast<int>(out.samples.size()) < 9)
    throw GeometryError("congruence_image: not enough exact samples");
  out.kernel = fit_hypersurface(out.samples, 2);
  out.contains_c2 = false;
  for (const auto& q : out.kernel) {
    MultiPoly restricted = ch.restrict_to_c2_plane(q);
    if (restricted.is_zero() || MultiPoly::proportional(restricted, ch.c2_form()))
      out.contains_c2 = true;
  }
  return out;
}

std::pair<Point3, Point3> directrix_points(const NoetherChart& ch, const Congruence& c) {
  if (!c.contains(ch.distinguished_line()))
    throw GeometryError("directrix_points: the distinguished line must belong");
  auto d = congruence_directrices(c);
  if (d.doubled) throw GeometryError("directrix_points: doubled directrix");
  const PlueckerLine& l0 = ch.distinguished_line();

  // For X = l0 ∩ R, the congruence pencil at X (lines through X meeting the
  // other directrix) contains l0 and contracts to a single image on C2.
  auto point_for = [&](const PlueckerLine& r, const PlueckerLine& other) {
    if (omega(l0, r) != Scalar(0))
      throw GeometryError("directrix_points: directrix misses the line");
    // intersection point: meet l0 with a plane containing r but not l0
    auto [ra, rb] = line_span_planes(r);
    std::optional<Point3> x;
    for (const Plane3& pl : {ra, rb}) {
      auto m = meet_line_plane(l0, pl);
      if (m) {
        x = *m;
        break;
      }
    }
    if (!x || !point_on_line(*x, r))
      throw GeometryError("directrix_points: degenerate meeting");
    auto [q1, q2] = line_span_points(other);
    std::optional<Point3> contracted;
    for (const Point3& q : {q1, q2}) {
      if (q == *x) continue;
      PlueckerLine member = line_from_points(*x, q);
      if (member == l0) continue;
      Point3 img = ch.forward(member).p;
      if (!contracted)
        contracted = img;
      else if (!(img == *contracted))
        throw GeometryError("directrix_points: pencil failed to contract");
    }
    if (!contracted) throw GeometryError("directrix_points: no pencil member");
    if (!ch.point_on_c2(*contracted))
      throw GeometryError("directrix_points: image missed C2");
    return *contracted;
  };
  return {point_for(d.r1, d.r2), point_for(d.r2, d.r1)};
}

}  // namespace linegeo
