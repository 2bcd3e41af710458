#ifndef LINEGEO_PLUECKER_SURFACE_HPP
#define LINEGEO_PLUECKER_SURFACE_HPP

#include <vector>

#include "linegeo/complexes.hpp"
#include "linegeo/unipoly.hpp"

namespace linegeo {

// Pencil of planes through a fixed line g, with an affine frame
// (A, B, D(t)) spanning pi(t) = pi0 + t*pi1.
struct PlanePencil {
  PlueckerLine g;
  Plane3 pi0, pi1;
  Point3 a, b;        // span of g
  Point3 d0, d1;      // D(t) = d0 + t*d1
};
PlanePencil plane_pencil(const PlueckerLine& g);

// Envelope of the complex lines lying in a plane, as a conic.
struct ConicEnvelope {
  int rank;                       // of the restricted line form
  std::array<Point3, 3> frame;    // spanning points of the plane
  Matrix line_form;               // 3x3 on line coefficients in the frame
  Matrix point_conic;             // adjugate; the point equation when rank 3
};
ConicEnvelope complex_conic_in_plane(const QuadraticComplex& k2, const Plane3& pi);

// Plücker line in ambient coordinates for frame line coefficients u:
// the zero set of u against frame coordinates.
PlueckerLine frame_line(const std::array<Point3, 3>& frame, std::span<const Scalar> u);

struct ComplexSurface {
  MultiPoly f;  // homogeneous quartic with double line g
  PlueckerLine g;
  PlanePencil pencil;
  bool g_in_complex;
  std::vector<std::vector<UniPoly>> conic_family;  // 3x3 line form over t
};
ComplexSurface complex_surface(const QuadraticComplex& k2, const PlueckerLine& g);

// Parameter positions of the pinch points on the double line g(t) = A + t*B,
// from the discriminant of the transverse tangent form.
struct PinchPoint {
  bool at_infinity;  // parameter (0 : 1), the point B
  RootInfo root;     // finite parameter description otherwise
};
struct PinchPointResult {
  UniPoly discriminant;   // dehomogenized at t0 = 1; degree + infinity = 4
  int infinity_multiplicity;
  std::vector<PinchPoint> points;
  int total_multiplicity;  // always 4 for a nondegenerate double line
  // transverse binary form coefficients over t, for tangent-cone checks
  UniPoly c20, c11, c02;
  std::pair<Point3, Point3> transverse;  // directions used
};
PinchPointResult pinch_points(const ComplexSurface& s);

// True when the restriction of f to the line span(a, b) has a multiple root
// (counting a drop in degree as a root at infinity).
bool restriction_has_double_root(const MultiPoly& f, const Point3& a, const Point3& b);

// Non-certified count of isolated double points off the double line, by the
// numeric node search.
int count_nodes_off_line(const ComplexSurface& s, uint64_t seed = 2024);

}  // namespace linegeo

#endif
