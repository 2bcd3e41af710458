#ifndef LINEGEO_SCALAR_HPP
#define LINEGEO_SCALAR_HPP

#include <gmpxx.h>

#include <complex>
#include <stdexcept>
#include <string>

namespace linegeo {

// Mixing two different quadratic extensions in one expression.
struct TowerError : std::runtime_error {
  explicit TowerError(const std::string& msg) : std::runtime_error(msg) {}
};

struct ExactDivisionError : std::runtime_error {
  explicit ExactDivisionError(const std::string& msg) : std::runtime_error(msg) {}
};

struct GeometryError : std::runtime_error {
  explicit GeometryError(const std::string& msg) : std::runtime_error(msg) {}
};

// Returns f with m = s^2 * f and f free of small square factors (never a
// perfect square unless f == 1).  s receives the extracted square root part.
mpz_class square_free_part(const mpz_class& m, mpz_class& s);

// Exact element of Q, Q(i), or Q(sqrt(delta)) for one square-free integer
// delta chosen at runtime (delta = -1 is the Gaussian tower).  Stored as
// re + ex*sqrt(delta); ex == 0 forces delta == 0.  At most one extension can
// appear in any expression; mixing towers throws TowerError.
class Scalar {
 public:
  Scalar() : re_(0), ex_(0), delta_(0) {}
  Scalar(long n) : re_(n), ex_(0), delta_(0) {}  // NOLINT: implicit by design
  Scalar(long num, long den);
  explicit Scalar(const mpq_class& q) : re_(q), ex_(0), delta_(0) {}
  Scalar(mpq_class re, mpq_class ex, mpz_class delta);

  static Scalar i() { return Scalar(mpq_class(0), mpq_class(1), mpz_class(-1)); }
  // sqrt of a rational, possibly opening the extension (or Gaussian) tower.
  static Scalar sqrt_rational(const mpq_class& r);

  const mpq_class& re() const { return re_; }
  const mpq_class& ex() const { return ex_; }
  const mpz_class& delta() const { return delta_; }

  bool is_rational() const { return ex_ == 0; }
  bool is_zero() const { return re_ == 0 && ex_ == 0; }
  bool is_one() const { return ex_ == 0 && re_ == 1; }

  Scalar operator-() const { return Scalar(-re_, -ex_, delta_); }
  Scalar conj() const { return Scalar(re_, -ex_, delta_); }
  // re^2 - delta*ex^2; zero iff the value is zero (delta non-square).
  mpq_class norm() const;
  Scalar inv() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  bool operator==(const Scalar& o) const {
    return re_ == o.re_ && ex_ == o.ex_ && delta_ == o.delta_;
  }
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  // Sign of a real value; throws for non-real extension elements.
  int sign() const;
  double to_double() const;
  std::complex<double> to_complex() const;
  std::string str() const;

 private:
  // Merged tower of two operands; throws on a genuine mismatch.
  static mpz_class join(const Scalar& a, const Scalar& b);

  mpq_class re_, ex_;
  mpz_class delta_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace linegeo

#endif
