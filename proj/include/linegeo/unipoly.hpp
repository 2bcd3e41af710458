#ifndef LINEGEO_UNIPOLY_HPP
#define LINEGEO_UNIPOLY_HPP

#include <optional>
#include <utility>
#include <vector>

#include "linegeo/poly.hpp"
#include "linegeo/scalar.hpp"

namespace linegeo {

// Dense univariate polynomial over Scalar, coefficients ascending.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { trim(); }
  static UniPoly constant(const Scalar& c) { return UniPoly({c}); }
  static UniPoly from_multipoly(const MultiPoly& p);  // arity-1 input

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const Scalar& lc() const { return c_.back(); }
  Scalar coeff(int i) const {
    return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : Scalar();
  }
  const std::vector<Scalar>& coeffs() const { return c_; }

  UniPoly operator-() const;
  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  UniPoly scaled(const Scalar& s) const;
  bool operator==(const UniPoly& o) const { return c_ == o.c_; }

  UniPoly monic() const;
  UniPoly derivative() const;
  Scalar eval(const Scalar& x) const;
  mpq_class eval_q(const mpq_class& x) const;  // rational coefficients only
  // shift by a rational: p(t + a)
  UniPoly shifted(const Scalar& a) const;

  // quotient/remainder over the coefficient field
  static std::pair<UniPoly, UniPoly> quotrem(const UniPoly& a, const UniPoly& b);

  std::string str() const;

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<Scalar> c_;
};

// Monic GCD; degree 0 means coprime.
UniPoly gcd(const UniPoly& a, const UniPoly& b);
Scalar resultant(const UniPoly& p, const UniPoly& q);
Scalar discriminant(const UniPoly& p);

// Yun decomposition: list of (square-free factor, multiplicity), nontrivial
// factors only; the product of factor^mult recovers p up to a scalar.
std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& p);

// All rational roots with multiplicities (rational coefficients required).
std::vector<std::pair<mpq_class, int>> rational_roots(const UniPoly& p);

// Both roots of a quadratic, exact over at most one square root.
std::pair<Scalar, Scalar> solve_quadratic(const Scalar& a, const Scalar& b,
                                          const Scalar& c);

// Try to write a rational quartic as a product of two rational quadratics.
std::optional<std::pair<UniPoly, UniPoly>> quartic_split(const UniPoly& p);

// Exact root description for degree <= 4 (rational coefficients).  Exact
// entries carry a tower value; Isolated entries carry a rational isolating
// interval of a square-free factor; NonReal entries only count conjugate
// roots of factors that do not break over a single square root.
struct RootInfo {
  enum class Kind { Exact, Isolated, NonReal };
  Kind kind = Kind::Exact;
  Scalar value;          // Exact
  mpq_class lo, hi;      // Isolated
  UniPoly factor;        // Isolated / NonReal
  int multiplicity = 1;  // total count for NonReal (with factor multiplicity)
};
std::vector<RootInfo> isolate_roots(const UniPoly& p);

// Roots expressible in the tower (rational or one square root), with
// multiplicity.  Strips rational roots, solves quadratics, and attempts the
// two-quadratics split for quartics.
std::vector<std::pair<Scalar, int>> tower_roots(const UniPoly& p);

// Number of real roots of a square-free rational polynomial in (a, b].
int sturm_count(const UniPoly& p, const mpq_class& a, const mpq_class& b);

}  // namespace linegeo

#endif
