#ifndef LINEGEO_MATRIX_HPP
#define LINEGEO_MATRIX_HPP

#include <initializer_list>
#include <utility>
#include <vector>

#include "linegeo/poly.hpp"
#include "linegeo/scalar.hpp"

namespace linegeo {

// Dense matrix of Scalars.  Elimination is fraction-free (Bareiss); all
// results are exact over the active tower.
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<Scalar>> rows);

  static Matrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Scalar& at(int r, int c) { return a_[r * cols_ + c]; }
  const Scalar& at(int r, int c) const { return a_[r * cols_ + c]; }

  Matrix transposed() const;
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  Matrix scaled(const Scalar& c) const;
  bool operator==(const Matrix& o) const { return cols_ == o.cols_ && a_ == o.a_; }

  std::vector<Scalar> apply(std::span<const Scalar> v) const;

  Scalar det() const;
  int rank() const;
  // Basis of the right null space, one vector per column of the result.
  std::vector<std::vector<Scalar>> kernel() const;
  // Transposed cofactor matrix; adj(M)*M = det(M)*I.  Square only.
  Matrix adjugate() const;
  Matrix inverse() const;

  // Solve M x = rhs for square nonsingular M.
  std::vector<Scalar> solve(std::span<const Scalar> rhs) const;

 private:
  int rows_, cols_;
  std::vector<Scalar> a_;
};

// det of a square matrix of polynomials by cofactor expansion (small n).
MultiPoly poly_det(const std::vector<std::vector<MultiPoly>>& m);

// Factor a ternary quadratic form of rank <= 2 as L1*L2 (exact), opening at
// most one square-root extension; rank-1 input returns L1 == L2.  The form is
// given by its symmetric 3x3 matrix; the linear forms come back as length-3
// coefficient vectors.  Throws GeometryError on rank-3 input.
struct Rank2Split {
  std::vector<Scalar> l1, l2;
  mpz_class delta;  // 0 when the split is rational
};
Rank2Split rank2_split(const Matrix& q);

}  // namespace linegeo

#endif
