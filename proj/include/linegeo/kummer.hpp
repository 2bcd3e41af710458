#ifndef LINEGEO_KUMMER_HPP
#define LINEGEO_KUMMER_HPP

#include <optional>
#include <vector>

#include "linegeo/numeric.hpp"
#include "linegeo/poly.hpp"

namespace linegeo {

// class of a surface of order n with d double points
long class_formula(long n, long d);

struct Trope {
  std::array<Cx, 4> plane;           // normalized covector
  std::vector<int> node_indices;     // the six nodes on the contact conic
  double square_residual;            // perfect-square defect of F restricted
};

struct KummerSurface {
  MultiPoly f;
  std::vector<NumericNode> nodes;
  std::vector<Trope> tropes;
  std::vector<std::vector<int>> incidence;  // tropes x nodes, 0/1
};

// Numeric node search wrapper with the positive-dimensional signal promoted
// to an error (e.g. the Roman surface double lines).
std::vector<NumericNode> find_nodes(const MultiPoly& f, uint64_t seed = 2024);

// Tropes by screening all six-node subsets: coplanarity filter, then the
// contact conic through the six nodes must square to the restriction of F.
std::vector<Trope> find_tropes(const MultiPoly& f, const std::vector<NumericNode>& nodes,
                               double square_tol = 1e-9);

struct ConfigurationCheck {
  bool ok;
  std::vector<std::vector<int>> incidence;
  std::vector<int> row_sums, col_sums;
  std::string failure;
};
ConfigurationCheck configuration_check(const KummerSurface& k);

KummerSurface analyze_kummer(const MultiPoly& f, uint64_t seed = 2024);

// Fresnel wave surface for semi-axis parameters a2 > b2 > c2 > 0.
struct FresnelSurface {
  mpq_class a2, b2, c2;
  MultiPoly f;  // homogeneous quartic, variables (x, y, z, w)
};
FresnelSurface fresnel_surface(const mpq_class& a2, const mpq_class& b2,
                               const mpq_class& c2);
std::vector<NumericNode> fresnel_real_nodes(const FresnelSurface& f);

// The four real singular tangent planes, each touching along a circle.
struct FresnelTrope {
  std::array<double, 4> plane;
  double square_residual;   // perfect-square defect of the restriction
  double circle_residual;   // deviation of the contact conic from a circle
};
std::vector<FresnelTrope> fresnel_singular_planes(const FresnelSurface& f);

}  // namespace linegeo

#endif
