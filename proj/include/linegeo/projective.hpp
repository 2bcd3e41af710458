#ifndef LINEGEO_PROJECTIVE_HPP
#define LINEGEO_PROJECTIVE_HPP

#include <array>
#include <optional>

#include "linegeo/matrix.hpp"
#include "linegeo/scalar.hpp"

namespace linegeo {

// Homogeneous 4-vector with equality up to scale.  The canonical
// representative has first nonzero coordinate 1.
struct HomVec4 {
  std::array<Scalar, 4> v;

  HomVec4() : v{} {}
  HomVec4(Scalar a, Scalar b, Scalar c, Scalar d) : v{a, b, c, d} { check(); }
  explicit HomVec4(std::array<Scalar, 4> a) : v(std::move(a)) { check(); }

  const Scalar& operator[](int i) const { return v[i]; }
  Scalar& operator[](int i) { return v[i]; }
  HomVec4 canonical() const;
  bool same(const HomVec4& o) const;  // projective equality

 private:
  void check() const;
};

struct Point3 : HomVec4 {
  using HomVec4::HomVec4;
  explicit Point3(const HomVec4& h) : HomVec4(h) {}
  bool operator==(const Point3& o) const { return same(o); }
};

struct Plane3 : HomVec4 {
  using HomVec4::HomVec4;
  explicit Plane3(const HomVec4& h) : HomVec4(h) {}
  bool operator==(const Plane3& o) const { return same(o); }
};

Scalar incidence(const Plane3& pi, const Point3& p);  // pi . p

// Line of projective 3-space in Plücker coordinates
// (p01, p02, p03, p23, p31, p12); the Plücker relation
// p01*p23 + p02*p31 + p03*p12 = 0 is enforced on construction.
class PlueckerLine {
 public:
  explicit PlueckerLine(std::array<Scalar, 6> p);
  PlueckerLine(Scalar p01, Scalar p02, Scalar p03, Scalar p23, Scalar p31, Scalar p12)
      : PlueckerLine(std::array<Scalar, 6>{p01, p02, p03, p23, p31, p12}) {}

  const Scalar& operator[](int i) const { return p_[i]; }
  const std::array<Scalar, 6>& coords() const { return p_; }
  PlueckerLine canonical() const;
  bool operator==(const PlueckerLine& o) const;

  // 4x4 antisymmetric matrix L with L[i][j] = p_ij.
  Matrix antisym() const;
  // dual coordinates (swap the two triples)
  PlueckerLine dual() const;

 private:
  std::array<Scalar, 6> p_;
};

PlueckerLine line_from_points(const Point3& p, const Point3& q);
PlueckerLine line_from_planes(const Plane3& a, const Plane3& b);

// Klein-quadric pairing; zero iff the lines meet.
Scalar omega(const PlueckerLine& a, const PlueckerLine& b);
Scalar omega(std::span<const Scalar> a, std::span<const Scalar> b);
// Matrix of the pairing (the swap matrix).
Matrix klein_matrix();

bool point_on_line(const Point3& p, const PlueckerLine& l);

// Intersection point; nullopt when the line lies in the plane.
std::optional<Point3> meet_line_plane(const PlueckerLine& l, const Plane3& pi);
// Spanned plane; nullopt when the point lies on the line.
std::optional<Plane3> plane_through(const PlueckerLine& l, const Point3& p);

// Two distinct points spanning the line / two planes cutting it.
std::pair<Point3, Point3> line_span_points(const PlueckerLine& l);
std::pair<Plane3, Plane3> line_span_planes(const PlueckerLine& l);

// Cross ratio (A,B;C,D) = (AC*BD)/(BC*AD) of four distinct collinear points.
Scalar cross_ratio(const Point3& a, const Point3& b, const Point3& c, const Point3& d);

// 6x6 action on line coordinates induced by an invertible point map.
Matrix plucker_transform(const Matrix& m);
Point3 transform_point(const Matrix& m, const Point3& p);
Plane3 transform_plane(const Matrix& m, const Plane3& pi);
PlueckerLine transform_line(const Matrix& m6, const PlueckerLine& l);

}  // namespace linegeo

#endif
