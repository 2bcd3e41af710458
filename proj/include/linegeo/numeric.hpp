#ifndef LINEGEO_NUMERIC_HPP
#define LINEGEO_NUMERIC_HPP

#include <array>
#include <complex>
#include <vector>

#include "linegeo/poly.hpp"

namespace linegeo {

using Cx = std::complex<double>;

// Multistart Newton search for the singular points of a homogeneous surface
// in P^3.  Works chart by chart on the square subsystem of three partials and
// filters by the full scaled gradient.
struct NumericNode {
  std::array<Cx, 4> x;  // scaled so the largest coordinate is 1
  double residual;      // max |dF_i| of the content-normalized polynomial
  bool real;
  // determinant of the transverse Hessian in the canonical chart; away from
  // zero for an ordinary node, tiny on cuspidal edges and worse degeneracies
  double hessian_det;
};

struct NodeSearchOptions {
  int starts_per_chart = 160;
  uint64_t seed = 2024;
  double residual_tol = 1e-12;
  double dedup_radius = 1e-6;
  bool probe_dimension = true;
};

struct NodeSearchResult {
  std::vector<NumericNode> nodes;
  bool positive_dimensional = false;
};

NodeSearchResult find_nodes_numeric(const MultiPoly& f,
                                    const NodeSearchOptions& opt = {});

// Dense polynomial in three variables over complex doubles, for numeric
// restriction of quartics to planes.  Indexed by exponents of the first two
// variables; the third is implied by homogeneity.
class CxTernary {
 public:
  explicit CxTernary(int degree);
  int degree() const { return deg_; }
  Cx& at(int i, int j);  // coefficient of a^i b^j c^(deg-i-j)
  const Cx& at(int i, int j) const;
  friend CxTernary operator*(const CxTernary& p, const CxTernary& q);
  double norm() const;
  CxTernary scaled(Cx k) const;
  friend CxTernary operator-(const CxTernary& p, const CxTernary& q);
  // inner product <p, q> = sum p_ij * conj(q_ij)
  Cx dot(const CxTernary& o) const;

 private:
  int deg_;
  std::vector<Cx> c_;
};

// Homogeneous restriction of f (arity 4) to the span of three points, as a
// CxTernary of the same degree.
CxTernary restrict_to_frame(const MultiPoly& f, const std::array<std::array<Cx, 4>, 3>& frame);

// Least-squares proportionality residual ||p - k q|| / ||p||.
double proportionality_residual(const CxTernary& p, const CxTernary& q);

}  // namespace linegeo

#endif
