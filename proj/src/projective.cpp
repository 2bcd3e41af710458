#include "linegeo/projective.hpp"

namespace linegeo {

void HomVec4::check() const {
  for (const auto& c : v)
    if (!c.is_zero()) return;
  throw GeometryError("homogeneous vector must be nonzero");
}

HomVec4 HomVec4::canonical() const {
  for (const auto& c : v)
    if (!c.is_zero()) {
      Scalar inv = c.inv();
      HomVec4 r = *this;
      for (auto& x : r.v) x *= inv;
      return r;
    }
  throw GeometryError("homogeneous vector must be nonzero");
}

bool HomVec4::same(const HomVec4& o) const {
  // canonical representatives compare structurally, which also stays safe
  // across different extension towers
  HomVec4 a = canonical(), b = o.canonical();
  for (int j = 0; j < 4; ++j)
    if (a.v[j] != b.v[j]) return false;
  return true;
}

Scalar incidence(const Plane3& pi, const Point3& p) {
  Scalar s;
  for (int i = 0; i < 4; ++i) s += pi[i] * p[i];
  return s;
}

PlueckerLine::PlueckerLine(std::array<Scalar, 6> p) : p_(std::move(p)) {
  bool nonzero = false;
  for (const auto& c : p_) nonzero |= !c.is_zero();
  if (!nonzero) throw GeometryError("PlueckerLine: zero vector");
  Scalar rel = p_[0] * p_[3] + p_[1] * p_[4] + p_[2] * p_[5];
  if (!rel.is_zero()) throw GeometryError("PlueckerLine: Plücker relation violated");
}

PlueckerLine PlueckerLine::canonical() const {
  for (const auto& c : p_)
    if (!c.is_zero()) {
      Scalar inv = c.inv();
      std::array<Scalar, 6> r = p_;
      for (auto& x : r) x *= inv;
      return PlueckerLine(r);
    }
  throw GeometryError("PlueckerLine: zero vector");
}

bool PlueckerLine::operator==(const PlueckerLine& o) const {
  PlueckerLine a = canonical(), b = o.canonical();
  for (int j = 0; j < 6; ++j)
    if (a.p_[j] != b.p_[j]) return false;
  return true;
}

Matrix PlueckerLine::antisym() const {
  const Scalar &p01 = p_[0], &p02 = p_[1], &p03 = p_[2];
  const Scalar &p23 = p_[3], &p31 = p_[4], &p12 = p_[5];
  Matrix m(4, 4);
  m.at(0, 1) = p01;
  m.at(0, 2) = p02;
  m.at(0, 3) = p03;
  m.at(1, 2) = p12;
  m.at(1, 3) = -p31;
  m.at(2, 3) = p23;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < i; ++j) m.at(i, j) = -m.at(j, i);
  return m;
}

PlueckerLine PlueckerLine::dual() const {
  return PlueckerLine(std::array<Scalar, 6>{p_[3], p_[4], p_[5], p_[0], p_[1], p_[2]});
}

PlueckerLine line_from_points(const Point3& p, const Point3& q) {
  auto minor = [&](int i, int j) { return p[i] * q[j] - p[j] * q[i]; };
  std::array<Scalar, 6> c{minor(0, 1), minor(0, 2), minor(0, 3),
                          minor(2, 3), minor(3, 1), minor(1, 2)};
  bool nonzero = false;
  for (const auto& x : c) nonzero |= !x.is_zero();
  if (!nonzero) throw GeometryError("line_from_points: coincident points");
  return PlueckerLine(c);
}

PlueckerLine line_from_planes(const Plane3& a, const Plane3& b) {
  auto minor = [&](int i, int j) { return a[i] * b[j] - a[j] * b[i]; };
  // dual coordinates, then swap triples
  std::array<Scalar, 6> c{minor(2, 3), minor(3, 1), minor(1, 2),
                          minor(0, 1), minor(0, 2), minor(0, 3)};
  bool nonzero = false;
  for (const auto& x : c) nonzero |= !x.is_zero();
  if (!nonzero) throw GeometryError("line_from_planes: coincident planes");
  return PlueckerLine(c);
}

Scalar omega(std::span<const Scalar> a, std::span<const Scalar> b) {
  return a[0] * b[3] + a[1] * b[4] + a[2] * b[5] + a[3] * b[0] + a[4] * b[1] +
         a[5] * b[2];
}

Scalar omega(const PlueckerLine& a, const PlueckerLine& b) {
  return omega(std::span<const Scalar>(a.coords()), std::span<const Scalar>(b.coords()));
}

Matrix klein_matrix() {
  Matrix k(6, 6);
  for (int i = 0; i < 3; ++i) {
    k.at(i, i + 3) = Scalar(1);
    k.at(i + 3, i) = Scalar(1);
  }
  return k;
}

bool point_on_line(const Point3& p, const PlueckerLine& l) {
  auto probe = l.dual().antisym().apply(std::span<const Scalar>(p.v));
  for (const auto& c : probe)
    if (!c.is_zero()) return false;
  return true;
}

std::optional<Point3> meet_line_plane(const PlueckerLine& l, const Plane3& pi) {
  auto x = l.antisym().apply(std::span<const Scalar>(pi.v));
  bool nonzero = false;
  for (const auto& c : x) nonzero |= !c.is_zero();
  if (!nonzero) return std::nullopt;  // line contained in the plane
  return Point3(x[0], x[1], x[2], x[3]);
}

std::optional<Plane3> plane_through(const PlueckerLine& l, const Point3& p) {
  auto x = l.dual().antisym().apply(std::span<const Scalar>(p.v));
  bool nonzero = false;
  for (const auto& c : x) nonzero |= !c.is_zero();
  if (!nonzero) return std::nullopt;  // point on the line
  return Plane3(x[0], x[1], x[2], x[3]);
}

std::pair<Point3, Point3> line_span_points(const PlueckerLine& l) {
  Matrix m = l.antisym();
  std::optional<Point3> first;
  for (int c = 0; c < 4; ++c) {
    std::array<Scalar, 4> col{m.at(0, c), m.at(1, c), m.at(2, c), m.at(3, c)};
    bool nonzero = false;
    for (const auto& x : col) nonzero |= !x.is_zero();
    if (!nonzero) continue;
    Point3 p(col);
    if (!first) {
      first = p;
    } else if (!(p == *first)) {
      return {*first, p};
    }
  }
  throw GeometryError("line_span_points: degenerate line");
}

std::pair<Plane3, Plane3> line_span_planes(const PlueckerLine& l) {
  auto [a, b] = line_span_points(l.dual());
  return {Plane3(a.v[0], a.v[1], a.v[2], a.v[3]), Plane3(b.v[0], b.v[1], b.v[2], b.v[3])};
}

Scalar cross_ratio(const Point3& a, const Point3& b, const Point3& c, const Point3& d) {
  const Point3* pts[4] = {&a, &b, &c, &d};
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (*pts[i] == *pts[j]) throw GeometryError("cross_ratio: repeated point");

  // Pick two coordinates where (a, b) project to an invertible 2x2 block.
  int i0 = -1, i1 = -1;
  for (int i = 0; i < 4 && i0 < 0; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (!(a[i] * b[j] - a[j] * b[i]).is_zero()) {
        i0 = i;
        i1 = j;
        break;
      }
  if (i0 < 0) throw GeometryError("cross_ratio: base points coincide");

  Matrix base({{a[i0], b[i0]}, {a[i1], b[i1]}});
  auto coeffs = [&](const Point3& p) {
    std::array<Scalar, 2> rhs{p[i0], p[i1]};
    auto sol = base.solve(std::span<const Scalar>(rhs.data(), 2));
    // collinearity check: p must equal sol[0]*a + sol[1]*b in all coordinates
    for (int k = 0; k < 4; ++k)
      if (p[k] != sol[0] * a[k] + sol[1] * b[k])
        throw GeometryError("cross_ratio: points not collinear");
    return sol;
  };
  auto cc = coeffs(c), dd = coeffs(d);
  // in the (a, b) basis: a=(1,0), b=(0,1); (A,B;C,D) = (AC*BD)/(BC*AD) via
  // 2x2 determinants
  Scalar ac = cc[1];          // det(a, c)
  Scalar bd = -dd[0];         // det(b, d)
  Scalar bc = -cc[0];         // det(b, c)
  Scalar ad = dd[1];          // det(a, d)
  if (bc.is_zero() || ad.is_zero())
    throw GeometryError("cross_ratio: degenerate configuration");
  return (ac * bd) / (bc * ad);
}

Matrix plucker_transform(const Matrix& m) {
  if (m.rows() != 4 || m.cols() != 4)
    throw std::invalid_argument("plucker_transform: expected 4x4");
  // pairs in coordinate order (01,02,03,23,31,12)
  static const int pr[6][2] = {{0, 1}, {0, 2}, {0, 3}, {2, 3}, {3, 1}, {1, 2}};
  Matrix out(6, 6);
  for (int col = 0; col < 6; ++col) {
    // image of the basis antisymmetric matrix e_a ^ e_b under L -> M L M^T
    int a = pr[col][0], b = pr[col][1];
    for (int row = 0; row < 6; ++row) {
      int i = pr[row][0], j = pr[row][1];
      out.at(row, col) = m.at(i, a) * m.at(j, b) - m.at(i, b) * m.at(j, a);
    }
  }
  return out;
}

Point3 transform_point(const Matrix& m, const Point3& p) {
  auto x = m.apply(std::span<const Scalar>(p.v));
  return Point3(x[0], x[1], x[2], x[3]);
}

Plane3 transform_plane(const Matrix& m, const Plane3& pi) {
  auto x = m.inverse().transposed().apply(std::span<const Scalar>(pi.v));
  return Plane3(x[0], x[1], x[2], x[3]);
}

PlueckerLine transform_line(const Matrix& m6, const PlueckerLine& l) {
  auto x = m6.apply(std::span<const Scalar>(l.coords()));
  return PlueckerLine(std::array<Scalar, 6>{x[0], x[1], x[2], x[3], x[4], x[5]});
}

}  // namespace linegeo
