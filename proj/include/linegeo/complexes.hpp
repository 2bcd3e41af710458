#ifndef LINEGEO_COMPLEXES_HPP
#define LINEGEO_COMPLEXES_HPP

#include <array>
#include <optional>
#include <vector>

#include "linegeo/poly.hpp"
#include "linegeo/projective.hpp"

namespace linegeo {

// Degree-1 complex: lines p with Omega(a, p) = 0.  Special (Omega(a,a) = 0)
// complexes consist of the lines meeting a fixed axis.
struct LinearComplex {
  std::array<Scalar, 6> a;

  explicit LinearComplex(std::array<Scalar, 6> coeffs);
  Scalar eval(const PlueckerLine& l) const;
  bool contains(const PlueckerLine& l) const { return eval(l).is_zero(); }
  bool is_special() const;
  PlueckerLine axis() const;  // requires is_special()
};

// Degree-2 complex: symmetric 6x6 form A with membership p^T A p = 0.  A is
// defined modulo multiples of the Klein form; the stored representative has
// Klein trace zero.
class QuadraticComplex {
 public:
  explicit QuadraticComplex(const Matrix& a);

  const Matrix& form() const { return a_; }
  Scalar eval(const PlueckerLine& l) const;
  Scalar eval_raw(std::span<const Scalar> p) const;
  bool contains(const PlueckerLine& l) const { return eval(l).is_zero(); }

  // lambda_1 u1^2 + ... + lambda_6 u6^2 in coordinates diagonalizing the
  // Klein pairing (u1 = p01+p23, u2 = p01-p23, ...).
  static QuadraticComplex diagonal(const std::array<Scalar, 6>& lambda);
  static QuadraticComplex tetrahedral(const Scalar& mu1, const Scalar& mu2,
                                      const Scalar& mu3);

 private:
  Matrix a_;
};

// Pencil member mu1*p01*p23 + mu2*p02*p31 + mu3*p03*p12 = 0 for the
// coordinate tetrahedron; defined modulo the Plücker relation.
struct TetrahedralComplex {
  std::array<Scalar, 3> mu;

  explicit TetrahedralComplex(std::array<Scalar, 3> m);
  Scalar eval(const PlueckerLine& l) const;
  bool contains(const PlueckerLine& l) const { return eval(l).is_zero(); }
  QuadraticComplex quadratic() const;
  // a member line avoiding the faces, for extracting the fixed cross ratio
  PlueckerLine sample_member() const;
  Scalar fixed_cross_ratio() const;
};

// Cone of complex lines through a point: symmetric 4x4 M with
// X^T M X = (P ^ X)^T A (P ^ X); M * P = 0.
Matrix complex_cone(const QuadraticComplex& k2, const Point3& p);

// 6x4 matrix of X -> P ^ X.
Matrix wedge_with(const Point3& p);

// Locus where the cone degenerates (rank <= 2): a homogeneous quartic.
// Throws GeometryError when the complex is degenerate (identically zero
// adjugate of the cone).
MultiPoly singularity_surface(const QuadraticComplex& k2);

// Cross ratio of the four intersection points with the coordinate planes in
// face order (x0, x1, x2, x3).
Scalar tetra_cross_ratio(const PlueckerLine& l);
// Image of l under diag(1, alpha, beta, gamma).
PlueckerLine scaling_action(const Scalar& alpha, const Scalar& beta,
                            const Scalar& gamma, const PlueckerLine& l);

// Order-2/class-2 data reduced to the linear pencil that cuts it.
struct Congruence {
  LinearComplex a, aprime;
  Congruence(LinearComplex first, LinearComplex second);
  bool contains(const PlueckerLine& l) const {
    return a.contains(l) && aprime.contains(l);
  }
};

struct Directrices {
  PlueckerLine r1, r2;
  bool doubled;      // limiting case R1 = R2
  mpz_class delta;   // extension opened by the special-member pencil roots
};
Directrices congruence_directrices(const Congruence& c);

// Exact points on {F = 0} found by root extraction along rational lines,
// preferring lines inside coordinate planes (where adapted quartics split).
// Coordinates live in at most one square-root extension per point.
std::vector<Point3> sample_surface_points(const MultiPoly& f, int want, uint64_t seed);

// Exact lines of the congruence cut by two linear complexes, by sampling the
// Klein quadric restricted to the pencil's orthogonal 4-space.
std::vector<PlueckerLine> sample_congruence_lines(const Congruence& c, int want,
                                                  uint64_t seed);

}  // namespace linegeo

#endif
