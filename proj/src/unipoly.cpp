#include "linegeo/unipoly.hpp"

#include <algorithm>
#include <sstream>

#include "linegeo/matrix.hpp"

namespace linegeo {

UniPoly UniPoly::from_multipoly(const MultiPoly& p) {
  if (p.arity() != 1) throw std::invalid_argument("UniPoly: arity != 1");
  std::vector<Scalar> c(p.degree() + 1);
  for (const auto& [e, v] : p.terms()) c[e[0]] = v;
  return UniPoly(std::move(c));
}

UniPoly UniPoly::operator-() const {
  std::vector<Scalar> c(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) c[i] = -c_[i];
  return UniPoly(std::move(c));
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  std::vector<Scalar> c(std::max(a.c_.size(), b.c_.size()));
  for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
  return UniPoly(std::move(c));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) {
  std::vector<Scalar> c(std::max(a.c_.size(), b.c_.size()));
  for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
  return UniPoly(std::move(c));
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return UniPoly();
  std::vector<Scalar> c(a.c_.size() + b.c_.size() - 1);
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return UniPoly(std::move(c));
}

UniPoly UniPoly::scaled(const Scalar& s) const {
  std::vector<Scalar> c(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) c[i] = c_[i] * s;
  return UniPoly(std::move(c));
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return *this;
  return scaled(lc().inv());
}

UniPoly UniPoly::derivative() const {
  if (c_.size() <= 1) return UniPoly();
  std::vector<Scalar> c(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * Scalar(static_cast<long>(i));
  return UniPoly(std::move(c));
}

Scalar UniPoly::eval(const Scalar& x) const {
  Scalar acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

mpq_class UniPoly::eval_q(const mpq_class& x) const {
  mpq_class acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    if (!it->is_rational()) throw TowerError("UniPoly: eval_q on extension coefficients");
    acc = acc * x + it->re();
  }
  return acc;
}

UniPoly UniPoly::shifted(const Scalar& a) const {
  // Horner: p(t+a) built from the top coefficient down
  UniPoly res;
  UniPoly t_plus_a({a, Scalar(1)});
  for (auto it = c_.rbegin(); it != c_.rend(); ++it)
    res = res * t_plus_a + UniPoly::constant(*it);
  return res;
}

std::pair<UniPoly, UniPoly> UniPoly::quotrem(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw std::domain_error("UniPoly: division by zero");
  UniPoly rem = a;
  std::vector<Scalar> q(std::max<int>(a.degree() - b.degree() + 1, 0));
  Scalar lb = b.lc().inv();
  while (!rem.is_zero() && rem.degree() >= b.degree()) {
    int k = rem.degree() - b.degree();
    Scalar f = rem.lc() * lb;
    q[k] = f;
    std::vector<Scalar> sub(k + b.c_.size());
    for (size_t i = 0; i < b.c_.size(); ++i) sub[k + i] = b.c_[i] * f;
    rem = rem - UniPoly(std::move(sub));
  }
  return {UniPoly(std::move(q)), rem};
}

std::string UniPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  for (int i = degree(); i >= 0; --i) {
    if (c_[i].is_zero()) continue;
    if (i != degree()) os << " + ";
    os << "(" << c_[i] << ")";
    if (i > 0) os << "*t";
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly x = a, y = b;
  while (!y.is_zero()) {
    UniPoly r = UniPoly::quotrem(x, y).second;
    x = y;
    y = r.is_zero() ? r : r.monic();
  }
  return x.is_zero() ? x : x.monic();
}

Scalar resultant(const UniPoly& p, const UniPoly& q) {
  const int m = p.degree(), n = q.degree();
  if (m < 0 || n < 0) return Scalar();
  if (m == 0 && n == 0) return Scalar(1);
  if (m == 0) {
    Scalar r(1);
    for (int i = 0; i < n; ++i) r *= p.coeff(0);
    return r;
  }
  if (n == 0) {
    Scalar r(1);
    for (int i = 0; i < m; ++i) r *= q.coeff(0);
    return r;
  }
  Matrix s(m + n, m + n);
  for (int r = 0; r < n; ++r)
    for (int i = 0; i <= m; ++i) s.at(r, r + i) = p.coeff(m - i);
  for (int r = 0; r < m; ++r)
    for (int i = 0; i <= n; ++i) s.at(n + r, r + i) = q.coeff(n - i);
  return s.det();
}

Scalar discriminant(const UniPoly& p) {
  const int n = p.degree();
  if (n < 1) throw std::invalid_argument("discriminant: degree < 1");
  if (n == 1) return Scalar(1);
  Scalar res = resultant(p, p.derivative());
  Scalar d = res / p.lc();
  if ((n * (n - 1) / 2) % 2) d = -d;
  return d;
}

std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& p) {
  std::vector<std::pair<UniPoly, int>> out;
  if (p.degree() < 1) return out;
  UniPoly g = gcd(p, p.derivative());
  UniPoly w = UniPoly::quotrem(p, g).first;
  UniPoly y = UniPoly::quotrem(p.derivative(), g).first;
  UniPoly z = y - w.derivative();
  int i = 1;
  while (w.degree() > 0) {
    UniPoly gi = gcd(w, z);
    if (gi.degree() > 0) out.emplace_back(gi, i);
    w = UniPoly::quotrem(w, gi).first;
    y = UniPoly::quotrem(z, gi).first;
    z = y - w.derivative();
    ++i;
  }
  return out;
}

namespace {

// All complex roots of a polynomial given by scaled double coefficients
// (ascending).  Good enough to steer exact verification for small degrees.
std::vector<std::complex<double>> durand_kerner(const std::vector<double>& c) {
  int deg = static_cast<int>(c.size()) - 1;
  while (deg > 0 && c[deg] == 0.0) --deg;
  if (deg < 1) return {};
  std::vector<std::complex<double>> a(deg + 1);
  for (int i = 0; i <= deg; ++i) a[i] = c[i] / c[deg];
  std::vector<std::complex<double>> z(deg);
  std::complex<double> seed(0.4, 0.9);
  z[0] = seed;
  for (int i = 1; i < deg; ++i) z[i] = z[i - 1] * seed;
  for (int iter = 0; iter < 200; ++iter) {
    double moved = 0;
    for (int i = 0; i < deg; ++i) {
      std::complex<double> num = a[deg];
      for (int k = deg - 1; k >= 0; --k) num = num * z[i] + a[k];
      std::complex<double> den = 1;
      for (int j = 0; j < deg; ++j)
        if (j != i) den *= z[i] - z[j];
      if (std::abs(den) < 1e-300) continue;
      std::complex<double> step = num / den;
      z[i] -= step;
      moved = std::max(moved, std::abs(step));
    }
    if (moved < 1e-14) break;
  }
  return z;
}

// Continued-fraction convergents of x with small denominators; candidates
// for an exact rational root near x.
std::vector<mpq_class> rational_candidates(double x) {
  std::vector<mpq_class> out;
  if (!std::isfinite(x) || std::abs(x) > 1e12) return out;
  double v = x;
  mpz_class p0 = 1, q0 = 0, p1 = 0, q1 = 1;  // convergents p/q
  for (int k = 0; k < 40; ++k) {
    double fl = std::floor(v);
    if (std::abs(fl) > 1e15) break;
    mpz_class ai(fl);
    mpz_class p2 = ai * p0 + p1, q2 = ai * q0 + q1;
    p1 = p0; q1 = q0; p0 = p2; q0 = q2;
    if (q0 > 0) {
      mpq_class cand(p0, q0);
      cand.canonicalize();
      double err = std::abs(cand.get_d() - x);
      if (err < 1e-9 * std::max(1.0, std::abs(x))) out.push_back(cand);
      if (err == 0 || q0 > mpz_class(1000000000)) break;
    }
    double rem = v - fl;
    if (rem < 1e-14) break;
    v = 1.0 / rem;
  }
  return out;
}

mpq_class cauchy_q(const UniPoly& p) {
  mpq_class m = 0;
  for (int i = 0; i < p.degree(); ++i) {
    mpq_class v = abs(p.coeff(i).re() / p.lc().re());
    if (v > m) m = v;
  }
  return m + 1;
}

// Clear denominators and content: integer coefficients, content 1.
UniPoly integer_primitive(const UniPoly& p) {
  mpz_class den_lcm = 1, num_gcd = 0;
  for (const Scalar& c : p.coeffs()) {
    if (!c.is_rational()) throw TowerError("rational_roots: extension coefficients");
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.re().get_den().get_mpz_t());
  }
  std::vector<Scalar> ci(p.coeffs().size());
  for (size_t i = 0; i < ci.size(); ++i) ci[i] = p.coeff(i) * Scalar(mpq_class(den_lcm));
  for (const Scalar& c : ci)
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.re().get_num().get_mpz_t());
  if (num_gcd == 0) return UniPoly();
  for (auto& c : ci) c = c * Scalar(mpq_class(mpz_class(1), num_gcd));
  return UniPoly(std::move(ci));
}

}  // namespace

std::vector<std::pair<mpq_class, int>> rational_roots(const UniPoly& p) {
  std::vector<std::pair<mpq_class, int>> out;
  if (p.degree() < 1) return out;
  UniPoly w = integer_primitive(p);

  // strip roots at zero
  int zero_mult = 0;
  while (w.degree() >= 1 && w.coeff(0).is_zero()) {
    std::vector<Scalar> c(w.coeffs().begin() + 1, w.coeffs().end());
    w = UniPoly(std::move(c));
    ++zero_mult;
  }
  if (zero_mult) out.emplace_back(mpq_class(0), zero_mult);
  if (w.degree() < 1) return out;

  // Numeric root finding guides the search; every candidate is verified
  // exactly, so precision only affects completeness for pathological inputs.
  const int deg0 = w.degree();
  std::vector<double> cd(deg0 + 1);
  double scale = 0;
  for (int i = 0; i <= deg0; ++i) {
    cd[i] = w.coeff(i).re().get_d();
    scale = std::max(scale, std::abs(cd[i]));
  }
  for (auto& v : cd) v /= scale;
  auto numeric = durand_kerner(cd);

  std::vector<mpq_class> candidates;
  for (const auto& z : numeric) {
    if (std::abs(z.imag()) > 1e-7) continue;
    for (const auto& cand : rational_candidates(z.real())) candidates.push_back(cand);
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  for (const auto& cand : candidates) {
    int mult = 0;
    while (w.degree() >= 1 && w.eval_q(cand) == 0) {
      UniPoly lin({Scalar(-cand), Scalar(1)});
      w = UniPoly::quotrem(w, lin).first;
      ++mult;
    }
    if (mult) out.emplace_back(cand, mult);
    if (w.degree() < 1) break;
  }
  return out;
}

std::pair<Scalar, Scalar> solve_quadratic(const Scalar& a, const Scalar& b,
                                          const Scalar& c) {
  if (a.is_zero()) throw std::invalid_argument("solve_quadratic: degree < 2");
  Scalar disc = b * b - Scalar(4) * a * c;
  if (!disc.is_rational())
    throw TowerError("solve_quadratic: discriminant outside the base field");
  Scalar root = Scalar::sqrt_rational(disc.re());
  Scalar two_a = Scalar(2) * a;
  return {(-b + root) / two_a, (-b - root) / two_a};
}

std::optional<std::pair<UniPoly, UniPoly>> quartic_split(const UniPoly& poly) {
  if (poly.degree() != 4) return std::nullopt;
  UniPoly m = poly.monic();
  // depress: t = s - a3/4
  Scalar shift = -m.coeff(3) / Scalar(4);
  UniPoly d = m.shifted(shift);
  Scalar p = d.coeff(2), q = d.coeff(1), r = d.coeff(0);

  auto undepress = [&](const UniPoly& f) { return f.shifted(-shift); };
  auto done = [&](const UniPoly& f1, const UniPoly& f2)
      -> std::optional<std::pair<UniPoly, UniPoly>> {
    return std::make_pair(undepress(f1).scaled(poly.lc()), undepress(f2));
  };

  if (q.is_zero()) {
    // (s^2+u)(s^2+v), u+v = p, uv = r
    Scalar disc = p * p - Scalar(4) * r;
    if (disc.is_rational()) {
      Scalar root = Scalar::sqrt_rational(disc.re());
      if (root.is_rational()) {
        Scalar u = (p + root) / Scalar(2), v = (p - root) / Scalar(2);
        return done(UniPoly({u, Scalar(), Scalar(1)}), UniPoly({v, Scalar(), Scalar(1)}));
      }
    }
    // (s^2+as+b)(s^2-as+b), b^2 = r, a^2 = 2b - p
    Scalar br = Scalar::sqrt_rational(r.re());
    if (br.is_rational()) {
      for (const Scalar& b : {br, -br}) {
        Scalar a2 = Scalar(2) * b - p;
        Scalar a = Scalar::sqrt_rational(a2.re());
        if (a.is_rational()) {
          return done(UniPoly({b, a, Scalar(1)}), UniPoly({b, -a, Scalar(1)}));
        }
      }
    }
    return std::nullopt;
  }

  // resolvent cubic z^3 + 2p z^2 + (p^2-4r) z - q^2 with z = u^2
  UniPoly resolvent({-(q * q), p * p - Scalar(4) * r, Scalar(2) * p, Scalar(1)});
  for (const auto& [z, mult] : rational_roots(resolvent)) {
    if (z <= 0) continue;
    Scalar u = Scalar::sqrt_rational(z);
    if (!u.is_rational()) continue;
    // (s^2 + us + v)(s^2 - us + w) with v + w = p + u^2, u(w - v) = q
    Scalar v = (p + u * u - q / u) / Scalar(2);
    Scalar w = (p + u * u + q / u) / Scalar(2);
    return done(UniPoly({v, u, Scalar(1)}), UniPoly({w, -u, Scalar(1)}));
  }
  return std::nullopt;
}

namespace {

int sign_changes(const std::vector<UniPoly>& seq, const mpq_class& x) {
  int changes = 0, prev = 0;
  for (const auto& f : seq) {
    int s = sgn(f.eval_q(x));
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++changes;
    prev = s;
  }
  return changes;
}

std::vector<UniPoly> sturm_sequence(const UniPoly& p) {
  std::vector<UniPoly> seq{p, p.derivative()};
  while (seq.back().degree() > 0) {
    UniPoly r = UniPoly::quotrem(seq[seq.size() - 2], seq.back()).second;
    if (r.is_zero()) break;
    seq.push_back(-r);
  }
  return seq;
}

}  // namespace

int sturm_count(const UniPoly& p, const mpq_class& a, const mpq_class& b) {
  auto seq = sturm_sequence(p);
  return sign_changes(seq, a) - sign_changes(seq, b);
}

std::vector<RootInfo> isolate_roots(const UniPoly& p) {
  std::vector<RootInfo> out;
  if (p.degree() < 1) return out;
  for (const auto& [sf, mult] : squarefree_decomposition(p.monic())) {
    UniPoly w = sf;
    // rational roots first
    for (const auto& [r, m] : rational_roots(w)) {
      RootInfo ri;
      ri.kind = RootInfo::Kind::Exact;
      ri.value = Scalar(r);
      ri.multiplicity = mult;  // square-free factor: m == 1
      out.push_back(ri);
      UniPoly lin({Scalar(-r), Scalar(1)});
      for (int k = 0; k < m; ++k) w = UniPoly::quotrem(w, lin).first;
    }
    if (w.degree() == 0) continue;

    std::vector<UniPoly> quads;
    if (w.degree() == 2) {
      quads.push_back(w);
      w = UniPoly::constant(Scalar(1));
    } else if (w.degree() == 4) {
      if (auto split = quartic_split(w)) {
        quads.push_back(split->first);
        quads.push_back(split->second);
        w = UniPoly::constant(Scalar(1));
      }
    }
    for (const auto& quad : quads) {
      auto [r1, r2] = solve_quadratic(quad.coeff(2), quad.coeff(1), quad.coeff(0));
      for (const Scalar& r : {r1, r2}) {
        RootInfo ri;
        ri.kind = RootInfo::Kind::Exact;
        ri.value = r;
        ri.multiplicity = mult;
        out.push_back(ri);
      }
    }
    if (w.degree() < 1) continue;

    // residual irreducible-over-Q factor of degree 3 or 4: Sturm isolation
    mpq_class bound = cauchy_q(w);
    auto seq = sturm_sequence(w);
    int total = sign_changes(seq, -bound) - sign_changes(seq, bound);
    std::vector<std::pair<mpq_class, mpq_class>> work{{-bound, bound}}, isolated;
    while (!work.empty()) {
      auto [lo, hi] = work.back();
      work.pop_back();
      int cnt = sign_changes(seq, lo) - sign_changes(seq, hi);
      if (cnt == 0) continue;
      if (cnt == 1) {
        isolated.emplace_back(lo, hi);
        continue;
      }
      mpq_class mid = (lo + hi) / 2;
      if (w.eval_q(mid) == 0) {
        // rational root would have been stripped; perturb the split point
        mid = (lo + mid) / 2;
      }
      work.emplace_back(lo, mid);
      work.emplace_back(mid, hi);
    }
    for (const auto& [lo, hi] : isolated) {
      RootInfo ri;
      ri.kind = RootInfo::Kind::Isolated;
      ri.lo = lo;
      ri.hi = hi;
      ri.factor = w;
      ri.multiplicity = mult;
      out.push_back(ri);
    }
    int nonreal = w.degree() - total;
    if (nonreal > 0) {
      RootInfo ri;
      ri.kind = RootInfo::Kind::NonReal;
      ri.factor = w;
      ri.multiplicity = nonreal * mult;
      out.push_back(ri);
    }
  }
  return out;
}

std::vector<std::pair<Scalar, int>> tower_roots(const UniPoly& p) {
  std::vector<std::pair<Scalar, int>> out;
  for (const auto& ri : isolate_roots(p))
    if (ri.kind == RootInfo::Kind::Exact) out.emplace_back(ri.value, ri.multiplicity);
  return out;
}

}  // namespace linegeo
