#ifndef LINEGEO_STEINER_HPP
#define LINEGEO_STEINER_HPP

#include <string>
#include <vector>

#include "linegeo/fit.hpp"
#include "linegeo/projective.hpp"

namespace linegeo {

// The Roman quartic with its quadratic parameterization, triple point, and
// three double lines.
struct SteinerSurface {
  MultiPoly f;                    // arity 4, degree 4
  std::array<MultiPoly, 4> phi;   // arity 3, degree 2
  Point3 triple_point;
  std::array<PlueckerLine, 3> double_lines;
};
SteinerSurface roman_surface();

using Param = std::array<Scalar, 3>;

// Image point of the parameterization; throws when undefined.
Point3 steiner_image(const SteinerSurface& s, const Param& u);
// Tangent plane at a smooth parameterized point.
Plane3 tangent_plane(const SteinerSurface& s, const Param& u);

// A conic lying in a plane, in the coordinates of a declared frame.
struct ConicInPlane {
  Plane3 carrier;
  std::array<Point3, 3> frame;
  Matrix m;          // 3x3 symmetric point conic, rank recorded
  int rank;
  mpz_class delta;   // extension of its entries (0 when rational)
};

// The tangent-plane section of a Steiner surface as a pair of conics.
struct TangentSplit {
  Plane3 plane;
  Param u;
  ConicInPlane c1, c2;
  mpz_class delta;
};
TangentSplit tangent_section_split(const SteinerSurface& s, const Param& u);

// One pole pair of Lie's construction.
struct PoleSample {
  Param u;
  Plane3 tangent;
  Point3 pole1, pole2;
  mpz_class delta;
};

struct SweepResult {
  std::vector<PoleSample> samples;
  std::vector<Point3> poles;          // both branches flattened
  std::vector<Point3> branch1, branch2;
  std::vector<std::string> skipped;   // per-sample reports
};

// Sweep pole pairs of the polar line (plane ∩ tangent plane) over
// deterministically sampled tangent planes.
SweepResult lie_sweep(const SteinerSurface& s, const Plane3& plane, int count,
                      uint64_t seed);

}  // namespace linegeo

#endif
