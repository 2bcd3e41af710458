#include "linegeo/numeric.hpp"

#include <algorithm>
#include <cmath>

#include "linegeo/sampling.hpp"

namespace linegeo {

namespace {

// dense complex coefficients of a 4-variable polynomial, exponent-indexed
struct CxPoly4 {
  std::vector<std::pair<Exponents, Cx>> terms;

  static CxPoly4 from(const MultiPoly& p, double scale) {
    CxPoly4 out;
    for (const auto& [e, c] : p.terms()) out.terms.emplace_back(e, c.to_complex() / scale);
    return out;
  }
  Cx eval(const std::array<Cx, 4>& x) const {
    Cx acc = 0;
    for (const auto& [e, c] : terms) {
      Cx t = c;
      for (int v = 0; v < 4; ++v)
        for (int k = 0; k < e[v]; ++k) t *= x[v];
      acc += t;
    }
    return acc;
  }
};

bool solve3(std::array<std::array<Cx, 3>, 3> a, std::array<Cx, 3>& b) {
  for (int col = 0; col < 3; ++col) {
    int piv = col;
    for (int r = col + 1; r < 3; ++r)
      if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
    if (std::abs(a[piv][col]) < 1e-300) return false;
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    for (int r = 0; r < 3; ++r) {
      if (r == col) continue;
      Cx f = a[r][col] / a[col][col];
      for (int c = col; c < 3; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  for (int i = 0; i < 3; ++i) b[i] /= a[i][i];
  return true;
}

std::array<Cx, 4> canonical_chart(std::array<Cx, 4> x) {
  int big = 0;
  for (int i = 1; i < 4; ++i)
    if (std::abs(x[i]) > std::abs(x[big])) big = i;
  Cx inv = 1.0 / x[big];
  for (auto& c : x) c *= inv;
  return x;
}

double dist(const std::array<Cx, 4>& a, const std::array<Cx, 4>& b) {
  double d = 0;
  for (int i = 0; i < 4; ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

}  // namespace

NodeSearchResult find_nodes_numeric(const MultiPoly& f, const NodeSearchOptions& opt) {
  if (f.arity() != 4) throw std::invalid_argument("find_nodes_numeric: arity != 4");
  NodeSearchResult out;
  double scale = 0;
  for (const auto& [e, c] : f.terms()) scale = std::max(scale, std::abs(c.to_double()));
  if (scale == 0) return out;

  std::array<CxPoly4, 4> grad;
  std::array<std::array<CxPoly4, 4>, 4> hess;
  for (int i = 0; i < 4; ++i) {
    MultiPoly di = f.derivative(i);
    grad[i] = CxPoly4::from(di, scale);
    for (int j = 0; j < 4; ++j) hess[i][j] = CxPoly4::from(di.derivative(j), scale);
  }

  auto full_residual = [&](const std::array<Cx, 4>& x) {
    double r = 0;
    for (int i = 0; i < 4; ++i) r = std::max(r, std::abs(grad[i].eval(x)));
    return r;
  };

  // Newton on the three partials excluding the chart coordinate.
  auto polish = [&](std::array<Cx, 4> x, int chart, double tol,
                    std::array<Cx, 4>& sol) {
    int idx[3], k = 0;
    for (int i = 0; i < 4; ++i)
      if (i != chart) idx[k++] = i;
    for (int iter = 0; iter < 60; ++iter) {
      std::array<Cx, 3> g;
      double gn = 0;
      for (int r = 0; r < 3; ++r) {
        g[r] = grad[idx[r]].eval(x);
        gn = std::max(gn, std::abs(g[r]));
      }
      if (gn < tol) {
        sol = x;
        return true;
      }
      std::array<std::array<Cx, 3>, 3> jac;
      for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) jac[r][c] = hess[idx[r]][idx[c]].eval(x);
      std::array<Cx, 3> step = g;
      if (!solve3(jac, step)) return false;
      double sn = 0;
      for (int r = 0; r < 3; ++r) {
        x[idx[r]] -= step[r];
        sn = std::max(sn, std::abs(step[r]));
      }
      if (sn > 1e6) return false;  // diverging
    }
    return false;
  };

  RationalSeq seq(opt.seed);
  auto rand_unit = [&] { return seq.next_int(-1000, 1000) / 1000.0; };

  std::vector<std::array<Cx, 4>> found;
  for (int chart = 0; chart < 4; ++chart) {
    for (int s = 0; s < opt.starts_per_chart; ++s) {
      std::array<Cx, 4> x;
      bool cplx = s % 2;
      for (int i = 0; i < 4; ++i)
        x[i] = cplx ? Cx(2 * rand_unit(), 2 * rand_unit()) : Cx(2 * rand_unit(), 0);
      x[chart] = 1.0;
      std::array<Cx, 4> sol;
      if (!polish(x, chart, 1e-13, sol)) continue;
      if (full_residual(sol) > opt.residual_tol) continue;
      std::array<Cx, 4> canon = canonical_chart(sol);
      bool dup = false;
      for (const auto& known : found)
        if (dist(canon, known) < opt.dedup_radius) {
          dup = true;
          break;
        }
      if (dup) continue;
      found.push_back(canon);
      // conjugate closure: the conjugate of a node of a real surface is a node
      std::array<Cx, 4> conj;
      for (int i = 0; i < 4; ++i) conj[i] = std::conj(canon[i]);
      conj = canonical_chart(conj);
      if (dist(conj, canon) > opt.dedup_radius) {
        bool cdup = false;
        for (const auto& known : found)
          if (dist(conj, known) < opt.dedup_radius) {
            cdup = true;
            break;
          }
        if (!cdup && full_residual(conj) <= opt.residual_tol) found.push_back(conj);
      }
    }
  }

  // probe for a positive-dimensional singular locus: a perturbed start that
  // re-converges to a nearby but distinct solution indicates a curve
  if (opt.probe_dimension) {
    for (const auto& node : found) {
      if (out.positive_dimensional) break;
      for (int probe = 0; probe < 6 && !out.positive_dimensional; ++probe) {
        std::array<Cx, 4> x = node;
        int chart = 0;
        for (int i = 1; i < 4; ++i)
          if (std::abs(x[i]) > std::abs(x[chart])) chart = i;
        for (int i = 0; i < 4; ++i)
          if (i != chart) x[i] += Cx(1e-3 * rand_unit(), 1e-3 * rand_unit());
        std::array<Cx, 4> sol;
        if (!polish(x, chart, 1e-13, sol)) continue;
        if (full_residual(sol) > opt.residual_tol) continue;
        std::array<Cx, 4> canon = canonical_chart(sol);
        double d = dist(canon, canonical_chart(node));
        if (d > opt.dedup_radius && d < 3e-2) out.positive_dimensional = true;
      }
    }
  }

  auto chart_hessian_det = [&](const std::array<Cx, 4>& x) {
    int chart = 0;
    for (int i = 1; i < 4; ++i)
      if (std::abs(x[i]) > std::abs(x[chart])) chart = i;
    int idx[3], k = 0;
    for (int i = 0; i < 4; ++i)
      if (i != chart) idx[k++] = i;
    Cx h[3][3];
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) h[r][c] = hess[idx[r]][idx[c]].eval(x);
    Cx det = h[0][0] * (h[1][1] * h[2][2] - h[1][2] * h[2][1]) -
             h[0][1] * (h[1][0] * h[2][2] - h[1][2] * h[2][0]) +
             h[0][2] * (h[1][0] * h[2][1] - h[1][1] * h[2][0]);
    return std::abs(det);
  };

  for (const auto& x : found) {
    NumericNode n;
    n.x = x;
    n.residual = full_residual(x);
    n.real = true;
    for (const auto& c : x) n.real &= std::abs(c.imag()) < 1e-9;
    n.hessian_det = chart_hessian_det(x);
    out.nodes.push_back(n);
  }
  std::sort(out.nodes.begin(), out.nodes.end(), [](const NumericNode& a, const NumericNode& b) {
    for (int i = 0; i < 4; ++i) {
      if (a.x[i].real() != b.x[i].real()) return a.x[i].real() < b.x[i].real();
      if (a.x[i].imag() != b.x[i].imag()) return a.x[i].imag() < b.x[i].imag();
    }
    return false;
  });
  return out;
}

CxTernary::CxTernary(int degree) : deg_(degree) {
  c_.assign((degree + 1) * (degree + 2) / 2, Cx(0, 0));
}

namespace {
int tern_index(int deg, int i, int j) {
  // index within all (i', j') with i'+j' <= deg
  int skipped = 0;
  for (int k = 0; k < i; ++k) skipped += deg + 1 - k;
  return skipped + j;
}
}  // namespace

Cx& CxTernary::at(int i, int j) { return c_[tern_index(deg_, i, j)]; }
const Cx& CxTernary::at(int i, int j) const { return c_[tern_index(deg_, i, j)]; }

CxTernary operator*(const CxTernary& p, const CxTernary& q) {
  CxTernary r(p.deg_ + q.deg_);
  for (int i = 0; i <= p.deg_; ++i)
    for (int j = 0; i + j <= p.deg_; ++j) {
      if (p.at(i, j) == Cx(0, 0)) continue;
      for (int k = 0; k <= q.deg_; ++k)
        for (int l = 0; k + l <= q.deg_; ++l) r.at(i + k, j + l) += p.at(i, j) * q.at(k, l);
    }
  return r;
}

CxTernary operator-(const CxTernary& p, const CxTernary& q) {
  CxTernary r = p;
  for (int i = 0; i <= p.deg_; ++i)
    for (int j = 0; i + j <= p.deg_; ++j) r.at(i, j) -= q.at(i, j);
  return r;
}

CxTernary CxTernary::scaled(Cx k) const {
  CxTernary r = *this;
  for (auto& c : r.c_) c *= k;
  return r;
}

double CxTernary::norm() const {
  double s = 0;
  for (const auto& c : c_) s += std::norm(c);
  return std::sqrt(s);
}

Cx CxTernary::dot(const CxTernary& o) const {
  Cx s = 0;
  for (size_t i = 0; i < c_.size(); ++i) s += c_[i] * std::conj(o.c_[i]);
  return s;
}

CxTernary restrict_to_frame(const MultiPoly& f,
                            const std::array<std::array<Cx, 4>, 3>& frame) {
  if (!f.is_homogeneous()) throw std::invalid_argument("restrict_to_frame: not homogeneous");
  const int d = f.degree();
  CxTernary out(d);
  for (const auto& [e, coeff] : f.terms()) {
    // product over variables of (frame[0][v] a + frame[1][v] b + frame[2][v] c)^e_v
    CxTernary term(0);
    term.at(0, 0) = coeff.to_complex();
    for (int v = 0; v < 4; ++v)
      for (int k = 0; k < e[v]; ++k) {
        CxTernary lin(1);
        lin.at(1, 0) = frame[0][v];
        lin.at(0, 1) = frame[1][v];
        lin.at(0, 0) = frame[2][v];
        term = term * lin;
      }
    // term has degree d; add into out
    for (int i = 0; i <= d; ++i)
      for (int j = 0; i + j <= d; ++j) out.at(i, j) += term.at(i, j);
  }
  return out;
}

double proportionality_residual(const CxTernary& p, const CxTernary& q) {
  double qn = q.norm();
  if (qn == 0) return p.norm() == 0 ? 0.0 : 1.0;
  Cx k = p.dot(q) / (qn * qn);
  return (p - q.scaled(k)).norm() / std::max(p.norm(), 1e-300);
}

}  // namespace linegeo
