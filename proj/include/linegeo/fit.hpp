#ifndef LINEGEO_FIT_HPP
#define LINEGEO_FIT_HPP

#include <vector>

#include "linegeo/projective.hpp"

namespace linegeo {

// Exact interpolation of degree-d forms through points.  A point whose
// coordinates live in a quadratic extension contributes two rational
// constraints (the rational and the square-root component of each monomial
// row), so the kernel is computed entirely over the rationals.
std::vector<MultiPoly> fit_hypersurface(const std::vector<Point3>& pts, int degree);

// Evaluate a form on a point.
Scalar eval_form(const MultiPoly& f, const Point3& p);

}  // namespace linegeo

#endif
