#include "linegeo/kummer.hpp"

#include <algorithm>
#include <cmath>

namespace linegeo {

long class_formula(long n, long d) {
  if (n < 2 || d < 0) throw std::invalid_argument("class_formula: need n >= 2, d >= 0");
  return n * (n - 1) * (n - 1) - 2 * d;
}

std::vector<NumericNode> find_nodes(const MultiPoly& f, uint64_t seed) {
  NodeSearchOptions opt;
  opt.seed = seed;
  auto res = find_nodes_numeric(f, opt);
  if (res.positive_dimensional)
    throw GeometryError("find_nodes: positive-dimensional singular locus");
  return res.nodes;
}

namespace {

// rank of a small complex matrix by elimination with a relative threshold
int cx_rank(std::vector<std::array<Cx, 4>> rows, double tol) {
  int rank = 0;
  for (int col = 0; col < 4 && rank < static_cast<int>(rows.size()); ++col) {
    int piv = -1;
    double best = tol;
    for (int r = rank; r < static_cast<int>(rows.size()); ++r)
      if (std::abs(rows[r][col]) > best) {
        best = std::abs(rows[r][col]);
        piv = r;
      }
    if (piv < 0) continue;
    std::swap(rows[rank], rows[piv]);
    for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
      if (r == rank) continue;
      Cx fac = rows[r][col] / rows[rank][col];
      for (int c = col; c < 4; ++c) rows[r][c] -= fac * rows[rank][c];
    }
    ++rank;
  }
  return rank;
}

std::array<Cx, 4> plane_through_three(const std::array<Cx, 4>& a,
                                      const std::array<Cx, 4>& b,
                                      const std::array<Cx, 4>& c) {
  std::array<Cx, 4> pi;
  for (int i = 0; i < 4; ++i) {
    int id[3], k = 0;
    for (int j = 0; j < 4; ++j)
      if (j != i) id[k++] = j;
    Cx det = a[id[0]] * (b[id[1]] * c[id[2]] - b[id[2]] * c[id[1]]) -
             a[id[1]] * (b[id[0]] * c[id[2]] - b[id[2]] * c[id[0]]) +
             a[id[2]] * (b[id[0]] * c[id[1]] - b[id[1]] * c[id[0]]);
    pi[i] = (i % 2 ? -det : det);
  }
  double n = 0;
  for (const auto& v : pi) n = std::max(n, std::abs(v));
  if (n > 0)
    for (auto& v : pi) v /= n;
  return pi;
}

Cx dot4(const std::array<Cx, 4>& a, const std::array<Cx, 4>& b) {
  Cx s = 0;
  for (int i = 0; i < 4; ++i) s += a[i] * b[i];
  return s;
}

// coordinates of x in the span of three frame points
std::array<Cx, 3> cx_frame_coords(const std::array<std::array<Cx, 4>, 3>& fr,
                                  const std::array<Cx, 4>& x) {
  // least-squares via normal equations of the 4x3 system
  Cx g[3][3], rhs[3];
  for (int i = 0; i < 3; ++i) {
    rhs[i] = 0;
    for (int j = 0; j < 3; ++j) g[i][j] = 0;
  }
  for (int r = 0; r < 4; ++r)
    for (int i = 0; i < 3; ++i) {
      rhs[i] += std::conj(fr[i][r]) * x[r];
      for (int j = 0; j < 3; ++j) g[i][j] += std::conj(fr[i][r]) * fr[j][r];
    }
  // 3x3 solve
  std::array<std::array<Cx, 3>, 3> m;
  std::array<Cx, 3> b;
  for (int i = 0; i < 3; ++i) {
    b[i] = rhs[i];
    for (int j = 0; j < 3; ++j) m[i][j] = g[i][j];
  }
  for (int col = 0; col < 3; ++col) {
    int piv = col;
    for (int r = col + 1; r < 3; ++r)
      if (std::abs(m[r][col]) > std::abs(m[piv][col])) piv = r;
    std::swap(m[piv], m[col]);
    std::swap(b[piv], b[col]);
    for (int r = 0; r < 3; ++r) {
      if (r == col) continue;
      Cx fchr = m[r][col] / m[col][col];
      for (int c = col; c < 3; ++c) m[r][c] -= fchr * m[col][c];
      b[r] -= fchr * b[col];
    }
  }
  for (int i = 0; i < 3; ++i) b[i] /= m[i][i];
  return b;
}

// null vector of a 6x6 complex system (conic through six points)
bool conic_through_six(const std::array<std::array<Cx, 3>, 6>& pts, std::array<Cx, 6>& q) {
  // monomials a^2, ab, ac, b^2, bc, c^2
  Cx m[6][6];
  for (int r = 0; r < 6; ++r) {
    const auto& p = pts[r];
    m[r][0] = p[0] * p[0];
    m[r][1] = p[0] * p[1];
    m[r][2] = p[0] * p[2];
    m[r][3] = p[1] * p[1];
    m[r][4] = p[1] * p[2];
    m[r][5] = p[2] * p[2];
  }
  // elimination; the null vector from back substitution
  int perm[6] = {0, 1, 2, 3, 4, 5};
  int rank = 0;
  std::vector<int> pivot_col;
  for (int col = 0; col < 6 && rank < 6; ++col) {
    int piv = -1;
    double best = 1e-9;
    for (int r = rank; r < 6; ++r)
      if (std::abs(m[r][col]) > best) {
        best = std::abs(m[r][col]);
        piv = r;
      }
    if (piv < 0) continue;
    std::swap(m[piv], m[rank]);
    std::swap(perm[piv], perm[rank]);
    for (int r = 0; r < 6; ++r) {
      if (r == rank) continue;
      Cx f = m[r][col] / m[rank][col];
      for (int c = col; c < 6; ++c) m[r][c] -= f * m[rank][c];
    }
    pivot_col.push_back(col);
    ++rank;
  }
  if (rank != 5) return false;
  // free column = the one not pivoted
  std::vector<bool> is_piv(6, false);
  for (int c : pivot_col) is_piv[c] = true;
  int free_c = 0;
  while (is_piv[free_c]) ++free_c;
  for (auto& v : q) v = 0;
  q[free_c] = 1;
  for (int i = rank - 1; i >= 0; --i) {
    int pc = pivot_col[i];
    Cx s = 0;
    for (int c = pc + 1; c < 6; ++c) s += m[i][c] * q[c];
    q[pc] = -s / m[i][pc];
  }
  return true;
}

}  // namespace

std::vector<Trope> find_tropes(const MultiPoly& f, const std::vector<NumericNode>& nodes,
                               double square_tol) {
  const int n = static_cast<int>(nodes.size());
  if (n < 6) throw GeometryError("find_tropes: need at least six nodes");
  std::vector<Trope> out;

  std::vector<int> idx(6);
  // iterate over all 6-subsets
  for (idx[0] = 0; idx[0] < n - 5; ++idx[0])
    for (idx[1] = idx[0] + 1; idx[1] < n - 4; ++idx[1])
      for (idx[2] = idx[1] + 1; idx[2] < n - 3; ++idx[2])
        for (idx[3] = idx[2] + 1; idx[3] < n - 2; ++idx[3])
          for (idx[4] = idx[3] + 1; idx[4] < n - 1; ++idx[4])
            for (idx[5] = idx[4] + 1; idx[5] < n; ++idx[5]) {
              std::vector<std::array<Cx, 4>> rows;
              for (int i : idx) rows.push_back(nodes[i].x);
              if (cx_rank(rows, 1e-6) > 3) continue;

              // plane through three spanning nodes
              std::array<Cx, 4> pi = plane_through_three(nodes[idx[0]].x, nodes[idx[1]].x,
                                                         nodes[idx[2]].x);
              bool incident = true;
              for (int i : idx)
                incident &= std::abs(dot4(pi, nodes[i].x)) < 1e-6;
              if (!incident) continue;

              // contact conic through the six nodes in the node frame
              std::array<std::array<Cx, 4>, 3> frame = {nodes[idx[0]].x, nodes[idx[1]].x,
                                                        nodes[idx[2]].x};
              std::array<std::array<Cx, 3>, 6> fc;
              for (int i = 0; i < 6; ++i) fc[i] = cx_frame_coords(frame, nodes[idx[i]].x);
              std::array<Cx, 6> q;
              if (!conic_through_six(fc, q)) continue;

              // perfect-square test: F restricted to the plane vs conic^2
              CxTernary rest = restrict_to_frame(f, frame);
              CxTernary conic(2);
              conic.at(2, 0) = q[0];
              conic.at(1, 1) = q[1];
              conic.at(1, 0) = q[2];
              conic.at(0, 2) = q[3];
              conic.at(0, 1) = q[4];
              conic.at(0, 0) = q[5];
              double res = proportionality_residual(rest, conic * conic);
              if (res > square_tol) continue;

              // dedup
              bool dup = false;
              for (const auto& t : out) {
                double d = 0;
                Cx scale = 0;
                double bestmag = 0;
                for (int i = 0; i < 4; ++i)
                  if (std::abs(t.plane[i]) > bestmag) {
                    bestmag = std::abs(t.plane[i]);
                    scale = pi[i] / t.plane[i];
                  }
                for (int i = 0; i < 4; ++i) d = std::max(d, std::abs(pi[i] - scale * t.plane[i]));
                dup |= d < 1e-6;
              }
              if (dup) continue;

              Trope t;
              t.plane = pi;
              t.node_indices.assign(idx.begin(), idx.end());
              t.square_residual = res;
              out.push_back(std::move(t));
            }
  return out;
}

ConfigurationCheck configuration_check(const KummerSurface& k) {
  ConfigurationCheck out;
  out.ok = true;
  if (k.nodes.empty() || k.tropes.empty()) {
    out.ok = false;
    out.failure = "empty node or trope list";
    return out;
  }
  const int nt = static_cast<int>(k.tropes.size());
  const int nn = static_cast<int>(k.nodes.size());
  out.incidence.assign(nt, std::vector<int>(nn, 0));
  out.row_sums.assign(nt, 0);
  out.col_sums.assign(nn, 0);
  for (int t = 0; t < nt; ++t)
    for (int p = 0; p < nn; ++p) {
      double v = std::abs(dot4(k.tropes[t].plane, k.nodes[p].x));
      if (v < 1e-6) {
        out.incidence[t][p] = 1;
        ++out.row_sums[t];
        ++out.col_sums[p];
      }
    }
  for (int t = 0; t < nt; ++t)
    if (out.row_sums[t] != 6) {
      out.ok = false;
      out.failure = "trope " + std::to_string(t) + " carries " +
                    std::to_string(out.row_sums[t]) + " nodes";
    }
  for (int p = 0; p < nn; ++p)
    if (out.col_sums[p] != 6) {
      out.ok = false;
      out.failure = "node " + std::to_string(p) + " lies on " +
                    std::to_string(out.col_sums[p]) + " tropes";
    }
  return out;
}

KummerSurface analyze_kummer(const MultiPoly& f, uint64_t seed) {
  KummerSurface k;
  k.f = f;
  k.nodes = find_nodes(f, seed);
  k.tropes = find_tropes(f, k.nodes);
  auto cfg = configuration_check(k);
  k.incidence = cfg.incidence;
  return k;
}

FresnelSurface fresnel_surface(const mpq_class& a2, const mpq_class& b2,
                               const mpq_class& c2) {
  if (!(a2 > b2 && b2 > c2 && c2 > 0))
    throw std::invalid_argument("fresnel_surface: parameters must satisfy a2 > b2 > c2 > 0");
  auto x = MultiPoly::variable(4, 0), y = MultiPoly::variable(4, 1),
       z = MultiPoly::variable(4, 2), w = MultiPoly::variable(4, 3);
  Scalar sa(a2), sb(b2), sc(c2);
  MultiPoly r2 = x * x + y * y + z * z;
  MultiPoly f = r2 * ((x * x).scaled(sa) + (y * y).scaled(sb) + (z * z).scaled(sc)) -
                (w * w) * ((x * x).scaled(sa * (sb + sc)) + (y * y).scaled(sb * (sc + sa)) +
                           (z * z).scaled(sc * (sa + sb))) +
                (w * w * w * w).scaled(sa * sb * sc);
  return FresnelSurface{a2, b2, c2, f};
}

std::vector<NumericNode> fresnel_real_nodes(const FresnelSurface& f) {
  std::vector<NumericNode> real;
  for (const auto& n : find_nodes(f.f)) {
    if (!n.real) continue;
    real.push_back(n);
  }
  return real;
}

std::vector<FresnelTrope> fresnel_singular_planes(const FresnelSurface& fs) {
  // the singular tangent planes are normal to the optic axes
  // n = (±sqrt((a2-b2)/(a2-c2)), 0, ±sqrt((b2-c2)/(a2-c2))) at distance b
  double a2 = fs.a2.get_d(), b2 = fs.b2.get_d(), c2 = fs.c2.get_d();
  double nx = std::sqrt((a2 - b2) / (a2 - c2));
  double nz = std::sqrt((b2 - c2) / (a2 - c2));
  double b = std::sqrt(b2);
  // The restriction of F to the plane {n.r = d}, written in an orthonormal
  // in-plane frame, must be proportional to the square of a circle equation
  // q = u^2 + v^2 + alpha*u*c + beta*v*c + gamma*c^2 (the contact circle is
  // generally not centered on the axis point).  Reconstruct q from the
  // leading coefficients and measure the defect.
  auto circle_defect = [&fs](const std::array<double, 3>& n, double d) {
    std::array<double, 3> e1{-n[2], 0.0, n[0]};
    double e1n = std::sqrt(e1[0] * e1[0] + e1[2] * e1[2]);
    e1[0] /= e1n;
    e1[2] /= e1n;
    std::array<double, 3> e2{0.0, 1.0, 0.0};
    std::array<std::array<Cx, 4>, 3> frame;
    for (int i = 0; i < 3; ++i) {
      frame[0][i] = e1[i];
      frame[1][i] = e2[i];
      frame[2][i] = d * n[i];
    }
    frame[0][3] = frame[1][3] = 0.0;
    frame[2][3] = 1.0;
    CxTernary g = restrict_to_frame(fs.f, frame);
    Cx k = g.at(4, 0);
    if (std::abs(k) < 1e-12) return 1.0;
    Cx alpha = g.at(3, 0) / (2.0 * k);
    Cx beta = g.at(0, 3) / (2.0 * k);
    Cx gamma = (g.at(2, 0) / k - alpha * alpha) / 2.0;
    CxTernary q(2);
    q.at(2, 0) = 1;
    q.at(0, 2) = 1;
    q.at(1, 0) = alpha;
    q.at(0, 1) = beta;
    q.at(0, 0) = gamma;
    return ((q * q).scaled(k) - g).norm() / g.norm();
  };

  std::vector<FresnelTrope> out;
  for (int sx = -1; sx <= 1; sx += 2)
    for (int sz = -1; sz <= 1; sz += 2) {
      std::array<double, 3> n{sx * nx, 0.0, sz * nz};
      // polish the tangent distance around the middle velocity by a scan
      double best_d = b, best = circle_defect(n, b);
      double lo = 0.8 * b, hi = 1.25 * b;
      for (int iter = 0; iter < 60; ++iter) {
        double step = (hi - lo) / 30;
        double cand_d = best_d, cand = best;
        for (double d = lo; d <= hi; d += step) {
          double r = circle_defect(n, d);
          if (r < cand) {
            cand = r;
            cand_d = d;
          }
        }
        best = cand;
        best_d = cand_d;
        lo = best_d - 2 * step;
        hi = best_d + 2 * step;
        if (best < 1e-13) break;
      }
      FresnelTrope t;
      t.plane = {n[0], n[1], n[2], -best_d};
      t.square_residual = best;
      t.circle_residual = best;  // the reconstruction enforces the circle shape
      out.push_back(t);
    }
  return out;
}

}  // namespace linegeo
