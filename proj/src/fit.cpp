#include "linegeo/fit.hpp"

namespace linegeo {

std::vector<MultiPoly> fit_hypersurface(const std::vector<Point3>& pts, int degree) {
  auto monos = monomials_of_degree(4, degree);
  const int cols = static_cast<int>(monos.size());

  std::vector<std::vector<Scalar>> rows;
  for (const auto& p : pts) {
    std::vector<Scalar> row(cols);
    bool extended = false;
    for (int c = 0; c < cols; ++c) {
      Scalar v(1);
      for (int var = 0; var < 4; ++var)
        for (int k = 0; k < monos[c][var]; ++k) v *= p[var];
      row[c] = v;
      extended |= !v.is_rational();
    }
    if (!extended) {
      rows.push_back(std::move(row));
    } else {
      std::vector<Scalar> re(cols), ex(cols);
      for (int c = 0; c < cols; ++c) {
        re[c] = Scalar(row[c].re());
        ex[c] = Scalar(row[c].ex());
      }
      rows.push_back(std::move(re));
      rows.push_back(std::move(ex));
    }
  }

  Matrix m(static_cast<int>(rows.size()), cols);
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < cols; ++c) m.at(r, c) = rows[r][c];

  std::vector<MultiPoly> basis;
  for (const auto& v : m.kernel()) {
    MultiPoly f(4);
    for (int c = 0; c < cols; ++c)
      if (!v[c].is_zero()) f += MultiPoly::monomial(4, monos[c], v[c]);
    basis.push_back(f.primitive());
  }
  return basis;
}

Scalar eval_form(const MultiPoly& f, const Point3& p) {
  std::array<Scalar, 4> pv = p.v;
  return f.eval(std::span<const Scalar>(pv));
}

}  // namespace linegeo
