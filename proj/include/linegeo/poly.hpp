#ifndef LINEGEO_POLY_HPP
#define LINEGEO_POLY_HPP

#include <map>
#include <optional>
#include <span>
#include <vector>

#include "linegeo/scalar.hpp"

namespace linegeo {

using Exponents = std::vector<int>;

// Graded lexicographic, largest first, so map iteration starts at the
// leading term.
struct GrlexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

// Sparse multivariate polynomial over Scalar.  Zero coefficients are never
// stored; the zero polynomial has an empty term map.
class MultiPoly {
 public:
  using TermMap = std::map<Exponents, Scalar, GrlexGreater>;

  explicit MultiPoly(int arity = 0) : arity_(arity) {}

  static MultiPoly constant(int arity, const Scalar& c);
  static MultiPoly variable(int arity, int index);
  static MultiPoly monomial(int arity, Exponents e, const Scalar& c);

  int arity() const { return arity_; }
  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }
  int num_terms() const { return static_cast<int>(terms_.size()); }

  // -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;
  Scalar coeff(const Exponents& e) const;
  void set_coeff(const Exponents& e, const Scalar& c);

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  MultiPoly scaled(const Scalar& c) const;

  bool operator==(const MultiPoly& o) const {
    return arity_ == o.arity_ && terms_ == o.terms_;
  }
  bool operator!=(const MultiPoly& o) const { return !(*this == o); }

  MultiPoly derivative(int var) const;
  // Substitute one polynomial per variable; all replacements share an arity.
  MultiPoly substitute(std::span<const MultiPoly> repl) const;
  MultiPoly pow(int e) const;

  Scalar eval(std::span<const Scalar> x) const;
  double eval_double(std::span<const double> x) const;
  std::complex<double> eval_complex(std::span<const std::complex<double>> x) const;

  // Exact quotient, or nullopt when the division leaves a remainder.
  std::optional<MultiPoly> divide_exact(const MultiPoly& divisor) const;

  // For rational polynomials: integer coefficients with content 1 and a
  // positive leading coefficient.  Extension towers are normalized by the
  // leading coefficient instead.
  MultiPoly primitive() const;
  // True if a == c*b for some nonzero scalar c (both nonzero, or both zero).
  static bool proportional(const MultiPoly& a, const MultiPoly& b);

  std::string str(std::span<const std::string> names = {}) const;

 private:
  int arity_;
  TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const MultiPoly& p);

// All exponent vectors of the given total degree, in graded-lex order.
std::vector<Exponents> monomials_of_degree(int arity, int degree);

}  // namespace linegeo

#endif
