#ifndef LINEGEO_NOETHER_HPP
#define LINEGEO_NOETHER_HPP

#include <vector>

#include "linegeo/complexes.hpp"
#include "linegeo/fit.hpp"

namespace linegeo {

// Stereographic chart of a non-special linear complex: the hyperplane
// section of the Klein quadric is projected from a distinguished member line
// onto a 3-space, sending complex lines to points.
class NoetherChart {
 public:
  explicit NoetherChart(const LinearComplex& k1);

  const LinearComplex& complex() const { return k1_; }
  const PlueckerLine& distinguished_line() const { return l0_; }

  struct Image {
    Point3 p;      // screen coordinates
    bool on_c2;    // the source line meets l0
  };
  // Throws when l is not in the complex; the distinguished line itself is
  // rejected as exceptional (it corresponds to the plane of C2).
  Image forward(const PlueckerLine& l) const;
  // Rational inverse off the exceptional conic; points of C2 have pencil
  // preimages and are rejected.
  PlueckerLine inverse(const Point3& p) const;

  // exceptional conic: its plane in screen coordinates and its equation on
  // the plane's frame
  const Plane3& c2_plane() const { return c2_plane_; }
  const Matrix& c2_conic() const { return c2_conic_; }
  // evaluate the C2 membership of a screen point lying on the C2 plane
  bool point_on_c2(const Point3& p) const;

  // restriction of a screen quadric (arity 4) to the plane of C2, in the
  // conic frame coordinates
  MultiPoly restrict_to_c2_plane(const MultiPoly& q) const;
  // C2 as a ternary quadratic in the same frame
  MultiPoly c2_form() const;

  // pencil of complex lines through a point of l0: all members contract to
  // one image point on C2, and planes through images of lines meeting a
  // member are tangent to C2 there
  struct PencilImage {
    Point3 contracted;              // the common image point, on C2
    std::vector<Plane3> tangent_planes;  // H(member) for sampled members
  };
  PencilImage pencil_image(const Scalar& t, int members) const;

  // screen-plane covector {x : Omega(member, x) = 0}
  Plane3 meeting_plane(const PlueckerLine& member) const;
  // tangency certificate of a screen plane against C2
  bool plane_tangent_to_c2(const Plane3& h) const;

  // lift a screen point to its 6-vector
  std::vector<Scalar> lift(const Point3& p) const;
  Point3 project6(std::span<const Scalar> x) const;  // frame coordinates

 private:
  LinearComplex k1_;
  PlueckerLine l0_;
  int b_index_;                            // screen cut: x[b_index] = 0
  std::vector<std::vector<Scalar>> frame_;  // 4 basis 6-vectors of the screen
  Plane3 c2_plane_;
  std::vector<std::vector<Scalar>> c2_frame_;  // 3 basis 6-vectors
  Matrix c2_conic_;
};

// Image of a congruence inside the chart's complex: the exact quadric
// through sampled images, with C2 containment data.
struct CongruenceImage {
  std::vector<Point3> samples;
  std::vector<MultiPoly> kernel;   // degree-2 forms through all samples
  bool contains_c2;
  bool degenerate;                 // l0 in the congruence: plane pair
};
CongruenceImage congruence_image(const NoetherChart& ch, const Congruence& c,
                                 int samples, uint64_t seed);

// For a congruence containing l0: the two fixed points on C2 contracted from
// the pencils at l0 ∩ R1 and l0 ∩ R2.
std::pair<Point3, Point3> directrix_points(const NoetherChart& ch, const Congruence& c);

}  // namespace linegeo

#endif
