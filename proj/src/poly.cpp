#include "linegeo/poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace linegeo {

namespace {

int total_degree(const Exponents& e) {
  return std::accumulate(e.begin(), e.end(), 0);
}

bool divides(const Exponents& d, const Exponents& e) {
  for (size_t i = 0; i < d.size(); ++i)
    if (d[i] > e[i]) return false;
  return true;
}

}  // namespace

bool GrlexGreater::operator()(const Exponents& a, const Exponents& b) const {
  int da = total_degree(a), db = total_degree(b);
  if (da != db) return da > db;
  return a > b;  // lex on equal degree
}

MultiPoly MultiPoly::constant(int arity, const Scalar& c) {
  MultiPoly p(arity);
  if (!c.is_zero()) p.terms_[Exponents(arity, 0)] = c;
  return p;
}

MultiPoly MultiPoly::variable(int arity, int index) {
  Exponents e(arity, 0);
  e.at(index) = 1;
  return monomial(arity, e, Scalar(1));
}

MultiPoly MultiPoly::monomial(int arity, Exponents e, const Scalar& c) {
  MultiPoly p(arity);
  if (static_cast<int>(e.size()) != arity)
    throw std::invalid_argument("MultiPoly: exponent arity mismatch");
  if (!c.is_zero()) p.terms_[std::move(e)] = c;
  return p;
}

int MultiPoly::degree() const {
  return terms_.empty() ? -1 : total_degree(terms_.begin()->first);
}

bool MultiPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = total_degree(terms_.begin()->first);
  for (const auto& [e, c] : terms_)
    if (total_degree(e) != d) return false;
  return true;
}

Scalar MultiPoly::coeff(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Scalar() : it->second;
}

void MultiPoly::set_coeff(const Exponents& e, const Scalar& c) {
  if (c.is_zero())
    terms_.erase(e);
  else
    terms_[e] = c;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r(arity_);
  for (const auto& [e, c] : terms_) r.terms_[e] = -c;
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  if (arity_ != o.arity_) throw std::invalid_argument("MultiPoly: arity mismatch");
  for (const auto& [e, c] : o.terms_) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  if (arity_ != o.arity_) throw std::invalid_argument("MultiPoly: arity mismatch");
  for (const auto& [e, c] : o.terms_) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, -c);
    } else {
      it->second -= c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.arity() != b.arity()) throw std::invalid_argument("MultiPoly: arity mismatch");
  MultiPoly r(a.arity());
  Exponents e(a.arity());
  for (const auto& [ea, ca] : a.terms())
    for (const auto& [eb, cb] : b.terms()) {
      for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      Scalar c = ca * cb;
      auto it = r.terms_.find(e);
      if (it == r.terms_.end()) {
        if (!c.is_zero()) r.terms_.emplace(e, c);
      } else {
        it->second += c;
        if (it->second.is_zero()) r.terms_.erase(it);
      }
    }
  return r;
}

MultiPoly MultiPoly::scaled(const Scalar& c) const {
  MultiPoly r(arity_);
  if (c.is_zero()) return r;
  for (const auto& [e, t] : terms_) r.terms_[e] = t * c;
  return r;
}

MultiPoly MultiPoly::derivative(int var) const {
  MultiPoly r(arity_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponents d = e;
    --d[var];
    r.terms_[d] = c * Scalar(e[var]);
  }
  return r;
}

MultiPoly MultiPoly::substitute(std::span<const MultiPoly> repl) const {
  if (static_cast<int>(repl.size()) != arity_)
    throw std::invalid_argument("MultiPoly: substitution arity mismatch");
  int out_arity = repl.empty() ? 0 : repl[0].arity();
  for (const auto& r : repl)
    if (r.arity() != out_arity)
      throw std::invalid_argument("MultiPoly: substitution arity mismatch");

  // Cache powers of each replacement up to the largest exponent used.
  std::vector<std::vector<MultiPoly>> powers(arity_);
  for (int v = 0; v < arity_; ++v)
    powers[v].push_back(MultiPoly::constant(out_arity, Scalar(1)));

  MultiPoly acc(out_arity);
  for (const auto& [e, c] : terms_) {
    MultiPoly term = MultiPoly::constant(out_arity, c);
    for (int v = 0; v < arity_; ++v) {
      while (static_cast<int>(powers[v].size()) <= e[v])
        powers[v].push_back(powers[v].back() * repl[v]);
      if (e[v] > 0) term = term * powers[v][e[v]];
    }
    acc += term;
  }
  return acc;
}

MultiPoly MultiPoly::pow(int e) const {
  MultiPoly r = MultiPoly::constant(arity_, Scalar(1));
  for (int k = 0; k < e; ++k) r = r * *this;
  return r;
}

Scalar MultiPoly::eval(std::span<const Scalar> x) const {
  Scalar acc;
  for (const auto& [e, c] : terms_) {
    Scalar t = c;
    for (int v = 0; v < arity_; ++v)
      for (int k = 0; k < e[v]; ++k) t *= x[v];
    acc += t;
  }
  return acc;
}

double MultiPoly::eval_double(std::span<const double> x) const {
  double acc = 0;
  for (const auto& [e, c] : terms_) {
    double t = c.to_double();
    for (int v = 0; v < arity_; ++v)
      for (int k = 0; k < e[v]; ++k) t *= x[v];
    acc += t;
  }
  return acc;
}

std::complex<double> MultiPoly::eval_complex(
    std::span<const std::complex<double>> x) const {
  std::complex<double> acc = 0;
  for (const auto& [e, c] : terms_) {
    std::complex<double> t = c.to_complex();
    for (int v = 0; v < arity_; ++v)
      for (int k = 0; k < e[v]; ++k) t *= x[v];
    acc += t;
  }
  return acc;
}

std::optional<MultiPoly> MultiPoly::divide_exact(const MultiPoly& divisor) const {
  if (arity_ != divisor.arity_)
    throw std::invalid_argument("MultiPoly: arity mismatch");
  if (divisor.is_zero()) throw std::domain_error("MultiPoly: division by zero");
  MultiPoly rem = *this;
  MultiPoly quo(arity_);
  const auto& [lead_e, lead_c] = *divisor.terms_.begin();
  while (!rem.is_zero()) {
    const auto& [re, rc] = *rem.terms_.begin();
    if (!divides(lead_e, re)) return std::nullopt;
    Exponents q(arity_);
    for (int i = 0; i < arity_; ++i) q[i] = re[i] - lead_e[i];
    MultiPoly m = monomial(arity_, q, rc / lead_c);
    quo += m;
    rem -= m * divisor;
  }
  return quo;
}

MultiPoly MultiPoly::primitive() const {
  if (is_zero()) return *this;
  for (const auto& [e, c] : terms_)
    if (!c.is_rational()) {
      // extension coefficients: normalize by the leading coefficient
      return scaled(terms_.begin()->second.inv());
    }
  mpz_class num_gcd = 0, den_lcm = 1;
  for (const auto& [e, c] : terms_) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.re().get_num().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.re().get_den().get_mpz_t());
  }
  mpq_class f(den_lcm, num_gcd);
  f.canonicalize();
  if (terms_.begin()->second.re() < 0) f = -f;
  return scaled(Scalar(f));
}

bool MultiPoly::proportional(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  if (a.arity() != b.arity() || a.num_terms() != b.num_terms()) return false;
  auto ita = a.terms().begin();
  auto itb = b.terms().begin();
  Scalar ratio = ita->second / itb->second;
  for (; ita != a.terms().end(); ++ita, ++itb) {
    if (ita->first != itb->first) return false;
    if (ita->second != ratio * itb->second) return false;
  }
  return true;
}

std::string MultiPoly::str(std::span<const std::string> names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c << ")";
    for (int v = 0; v < arity_; ++v) {
      if (e[v] == 0) continue;
      os << "*";
      if (v < static_cast<int>(names.size()))
        os << names[v];
      else
        os << "x" << v;
      if (e[v] > 1) os << "^" << e[v];
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const MultiPoly& p) {
  return os << p.str();
}

namespace {

void enumerate_exponents(int arity, int degree, Exponents& cur, int pos,
                         std::vector<Exponents>& out) {
  if (pos == arity - 1) {
    cur[pos] = degree;
    out.push_back(cur);
    return;
  }
  for (int e = degree; e >= 0; --e) {
    cur[pos] = e;
    enumerate_exponents(arity, degree - e, cur, pos + 1, out);
  }
}

}  // namespace

std::vector<Exponents> monomials_of_degree(int arity, int degree) {
  std::vector<Exponents> out;
  if (arity == 0) return out;
  Exponents cur(arity, 0);
  enumerate_exponents(arity, degree, cur, 0, out);
  return out;
}

}  // namespace linegeo
