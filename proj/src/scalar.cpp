#include "linegeo/scalar.hpp"

#include <sstream>

namespace linegeo {

namespace {
constexpr unsigned long kTrialBound = 1000000;
}

mpz_class square_free_part(const mpz_class& m, mpz_class& s) {
  s = 1;
  if (m == 0) return 0;
  mpz_class rest = abs(m);
  mpz_class f = m < 0 ? -1 : 1;
  for (unsigned long p = 2; p <= kTrialBound; p = (p == 2 ? 3 : p + 2)) {
    if (mpz_class(p) * p > rest) break;
    unsigned long e = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
      ++e;
    }
    if (e == 0) continue;
    mpz_class pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), p, e / 2);
    s *= pw;
    if (e % 2) f *= p;
  }
  if (rest > 1) {
    if (mpz_perfect_square_p(rest.get_mpz_t())) {
      mpz_class r;
      mpz_sqrt(r.get_mpz_t(), rest.get_mpz_t());
      s *= r;
    } else {
      f *= rest;  // not square-free in general, but certified non-square
    }
  }
  return f;
}

Scalar::Scalar(long num, long den) : re_(num, den), ex_(0), delta_(0) {
  if (den == 0) throw std::invalid_argument("Scalar: zero denominator");
  re_.canonicalize();
}

Scalar::Scalar(mpq_class re, mpq_class ex, mpz_class delta)
    : re_(std::move(re)), ex_(std::move(ex)), delta_(std::move(delta)) {
  if (ex_ == 0) {
    delta_ = 0;
    return;
  }
  if (delta_ == 0) {
    ex_ = 0;
    return;
  }
  // Fold square parts of delta into the coefficient; a perfect square
  // collapses the element back to the rationals.
  mpz_class s;
  mpz_class f = square_free_part(delta_, s);
  if (f == 1) {
    re_ += ex_ * s;
    ex_ = 0;
    delta_ = 0;
  } else {
    ex_ *= s;
    delta_ = f;
  }
}

Scalar Scalar::sqrt_rational(const mpq_class& r) {
  if (r == 0) return Scalar();
  // sqrt(n/d) = sqrt(n*d)/d
  mpz_class m = r.get_num() * r.get_den();
  mpz_class s;
  mpz_class f = square_free_part(m, s);
  mpq_class coeff(s, r.get_den());
  coeff.canonicalize();
  if (f == 1) return Scalar(coeff);
  return Scalar(mpq_class(0), coeff, f);
}

mpq_class Scalar::norm() const {
  return re_ * re_ - mpq_class(delta_) * ex_ * ex_;
}

Scalar Scalar::inv() const {
  if (is_zero()) throw std::domain_error("Scalar: division by zero");
  if (is_rational()) return Scalar(mpq_class(1) / re_);
  mpq_class n = norm();
  return Scalar(re_ / n, -ex_ / n, delta_);
}

mpz_class Scalar::join(const Scalar& a, const Scalar& b) {
  if (a.delta_ == 0) return b.delta_;
  if (b.delta_ == 0 || a.delta_ == b.delta_) return a.delta_;
  throw TowerError("Scalar: mixing sqrt(" + a.delta_.get_str() + ") with sqrt(" +
                   b.delta_.get_str() + ")");
}

Scalar& Scalar::operator+=(const Scalar& o) {
  mpz_class d = join(*this, o);
  re_ += o.re_;
  ex_ += o.ex_;
  delta_ = ex_ == 0 ? mpz_class(0) : d;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  mpz_class d = join(*this, o);
  re_ -= o.re_;
  ex_ -= o.ex_;
  delta_ = ex_ == 0 ? mpz_class(0) : d;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  mpz_class d = join(*this, o);
  mpq_class re = re_ * o.re_ + mpq_class(d) * ex_ * o.ex_;
  mpq_class ex = re_ * o.ex_ + ex_ * o.re_;
  re_ = re;
  ex_ = ex;
  delta_ = ex_ == 0 ? mpz_class(0) : d;
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inv(); }

int Scalar::sign() const {
  if (ex_ == 0) return sgn(re_);
  if (delta_ < 0) throw std::domain_error("Scalar: sign of a non-real value");
  if (re_ == 0) return sgn(ex_);
  int sr = sgn(re_);
  if (sr == sgn(ex_)) return sr;
  // |re| vs |ex|*sqrt(delta): compare squares
  mpq_class diff = re_ * re_ - mpq_class(delta_) * ex_ * ex_;
  return sgn(diff) == sr ? sr : -sr;
}

double Scalar::to_double() const {
  if (ex_ == 0) return re_.get_d();
  if (delta_ < 0) throw std::domain_error("Scalar: to_double of a non-real value");
  return re_.get_d() + ex_.get_d() * std::sqrt(delta_.get_d());
}

std::complex<double> Scalar::to_complex() const {
  if (ex_ == 0) return {re_.get_d(), 0.0};
  double root = std::sqrt(std::abs(delta_.get_d()));
  if (delta_ > 0) return {re_.get_d() + ex_.get_d() * root, 0.0};
  return {re_.get_d(), ex_.get_d() * root};
}

std::string Scalar::str() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) {
  if (s.is_rational()) return os << s.re();
  if (s.re() != 0) os << s.re() << (s.ex() > 0 ? "+" : "");
  if (s.ex() == -1)
    os << "-";
  else if (s.ex() != 1)
    os << s.ex() << "*";
  if (s.delta() == -1) return os << "i";
  return os << "sqrt(" << s.delta() << ")";
}

}  // namespace linegeo
