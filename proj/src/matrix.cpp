#include "linegeo/matrix.hpp"

#include <algorithm>

namespace linegeo {

Matrix::Matrix(std::initializer_list<std::initializer_list<Scalar>> rows) {
  rows_ = static_cast<int>(rows.size());
  cols_ = rows_ ? static_cast<int>(rows.begin()->size()) : 0;
  a_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != cols_)
      throw std::invalid_argument("Matrix: ragged initializer");
    for (const auto& v : r) a_.push_back(v);
  }
}

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
  return m;
}

Matrix Matrix::transposed() const {
  Matrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix: shape mismatch");
  Matrix r(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      const Scalar& v = a.at(i, k);
      if (v.is_zero()) continue;
      for (int j = 0; j < b.cols_; ++j) {
        Scalar t = v * b.at(k, j);
        r.at(i, j) += t;
      }
    }
  return r;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw std::invalid_argument("Matrix: shape mismatch");
  Matrix r(a.rows_, a.cols_);
  for (size_t i = 0; i < a.a_.size(); ++i) r.a_[i] = a.a_[i] + b.a_[i];
  return r;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw std::invalid_argument("Matrix: shape mismatch");
  Matrix r(a.rows_, a.cols_);
  for (size_t i = 0; i < a.a_.size(); ++i) r.a_[i] = a.a_[i] - b.a_[i];
  return r;
}

Matrix Matrix::scaled(const Scalar& c) const {
  Matrix r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * c;
  return r;
}

std::vector<Scalar> Matrix::apply(std::span<const Scalar> v) const {
  if (static_cast<int>(v.size()) != cols_)
    throw std::invalid_argument("Matrix: shape mismatch");
  std::vector<Scalar> r(rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r[i] += at(i, j) * v[j];
  return r;
}

namespace {

// Bareiss fraction-free elimination.  Returns the echelon matrix, the list of
// pivot columns, and the determinant when square.
struct Echelon {
  Matrix m;
  std::vector<int> pivot_cols;
  Scalar det;  // valid for square input
};

Echelon bareiss(Matrix m) {
  const int rows = m.rows(), cols = m.cols();
  Echelon out;
  out.det = Scalar(1);
  Scalar prev(1);
  int r = 0;
  int sign = 1;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pivot = -1;
    for (int i = r; i < rows; ++i)
      if (!m.at(i, c).is_zero()) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != r) {
      for (int j = 0; j < cols; ++j) std::swap(m.at(pivot, j), m.at(r, j));
      sign = -sign;
    }
    for (int i = r + 1; i < rows; ++i) {
      for (int j = c + 1; j < cols; ++j)
        m.at(i, j) = (m.at(r, c) * m.at(i, j) - m.at(i, c) * m.at(r, j)) / prev;
      m.at(i, c) = Scalar();
    }
    prev = m.at(r, c);
    out.pivot_cols.push_back(c);
    ++r;
  }
  if (rows == cols) {
    if (r < rows)
      out.det = Scalar();
    else
      out.det = Scalar(sign) * prev;
  }
  out.m = std::move(m);
  return out;
}

}  // namespace

Scalar Matrix::det() const {
  if (rows_ != cols_) throw std::invalid_argument("Matrix: det of non-square");
  if (rows_ == 0) return Scalar(1);
  return bareiss(*this).det;
}

int Matrix::rank() const { return static_cast<int>(bareiss(*this).pivot_cols.size()); }

std::vector<std::vector<Scalar>> Matrix::kernel() const {
  Echelon e = bareiss(*this);
  const int rk = static_cast<int>(e.pivot_cols.size());
  std::vector<bool> is_pivot(cols_, false);
  for (int c : e.pivot_cols) is_pivot[c] = true;

  std::vector<std::vector<Scalar>> basis;
  for (int free_c = 0; free_c < cols_; ++free_c) {
    if (is_pivot[free_c]) continue;
    std::vector<Scalar> v(cols_);
    v[free_c] = Scalar(1);
    // Back-substitute through the echelon rows.
    for (int i = rk - 1; i >= 0; --i) {
      int pc = e.pivot_cols[i];
      Scalar s;
      for (int j = pc + 1; j < cols_; ++j) s += e.m.at(i, j) * v[j];
      v[pc] = -s / e.m.at(i, pc);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

namespace {

Scalar minor_det(const Matrix& m, int skip_r, int skip_c) {
  Matrix s(m.rows() - 1, m.cols() - 1);
  int ri = 0;
  for (int r = 0; r < m.rows(); ++r) {
    if (r == skip_r) continue;
    int ci = 0;
    for (int c = 0; c < m.cols(); ++c) {
      if (c == skip_c) continue;
      s.at(ri, ci) = m.at(r, c);
      ++ci;
    }
    ++ri;
  }
  return s.det();
}

}  // namespace

Matrix Matrix::adjugate() const {
  if (rows_ != cols_) throw std::invalid_argument("Matrix: adjugate of non-square");
  const int n = rows_;
  Matrix adj(n, n);
  if (n == 1) {
    adj.at(0, 0) = Scalar(1);
    return adj;
  }
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      Scalar cof = minor_det(*this, r, c);
      if ((r + c) % 2) cof = -cof;
      adj.at(c, r) = cof;  // transposed
    }
  return adj;
}

Matrix Matrix::inverse() const {
  Scalar d = det();
  if (d.is_zero()) throw std::domain_error("Matrix: singular");
  return adjugate().scaled(d.inv());
}

std::vector<Scalar> Matrix::solve(std::span<const Scalar> rhs) const {
  if (rows_ != cols_ || static_cast<int>(rhs.size()) != rows_)
    throw std::invalid_argument("Matrix: shape mismatch");
  Matrix aug(rows_, cols_ + 1);
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) aug.at(r, c) = at(r, c);
    aug.at(r, cols_) = -rhs[r];
  }
  auto k = aug.kernel();
  for (const auto& v : k)
    if (!v[cols_].is_zero()) {
      std::vector<Scalar> x(rows_);
      Scalar inv = v[cols_].inv();
      for (int i = 0; i < rows_; ++i) x[i] = v[i] * inv;
      return x;
    }
  throw std::domain_error("Matrix: singular or inconsistent system");
}

MultiPoly poly_det(const std::vector<std::vector<MultiPoly>>& m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) throw std::invalid_argument("poly_det: empty");
  const int arity = m[0][0].arity();
  if (n == 1) return m[0][0];
  MultiPoly acc(arity);
  std::vector<std::vector<MultiPoly>> sub(n - 1, std::vector<MultiPoly>(n - 1, MultiPoly(arity)));
  for (int c = 0; c < n; ++c) {
    if (m[0][c].is_zero()) continue;
    for (int r = 1; r < n; ++r) {
      int ci = 0;
      for (int cc = 0; cc < n; ++cc) {
        if (cc == c) continue;
        sub[r - 1][ci] = m[r][cc];
        ++ci;
      }
    }
    MultiPoly term = m[0][c] * poly_det(sub);
    if (c % 2)
      acc -= term;
    else
      acc += term;
  }
  return acc;
}

Rank2Split rank2_split(const Matrix& q) {
  if (q.rows() != 3 || q.cols() != 3)
    throw std::invalid_argument("rank2_split: expected 3x3");
  int rk = q.rank();
  if (rk == 3) throw GeometryError("rank2_split: form has rank 3");
  Rank2Split out;
  out.delta = 0;
  if (rk == 0) {
    out.l1 = out.l2 = {Scalar(), Scalar(), Scalar()};
    return out;
  }

  // Choose a basis (u, v, k) with k spanning the kernel (rank 2) or the
  // 2-dimensional kernel's complement handled below (rank 1).  In these
  // coordinates the form is binary.
  auto ker = q.kernel();
  Matrix basis(3, 3);
  std::vector<std::vector<Scalar>> cols;
  // complete kernel vectors with standard basis vectors to a full basis
  for (auto& kv : ker) cols.push_back(kv);
  for (int i = 0; i < 3 && static_cast<int>(cols.size()) < 3; ++i) {
    std::vector<Scalar> e(3);
    e[i] = Scalar(1);
    cols.push_back(e);
    Matrix test(3, static_cast<int>(cols.size()));
    for (int r = 0; r < 3; ++r)
      for (size_t c = 0; c < cols.size(); ++c) test.at(r, c) = cols[c][r];
    if (test.rank() < static_cast<int>(cols.size())) cols.pop_back();
  }
  // order: non-kernel vectors first
  std::rotate(cols.begin(), cols.begin() + ker.size(), cols.end());
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) basis.at(r, c) = cols[c][r];

  // Binary form a*x^2 + 2b*x*y + c*y^2 in the first two basis directions.
  Matrix bq = basis.transposed() * q * basis;
  Scalar a = bq.at(0, 0), b = bq.at(0, 1), c = bq.at(1, 1);

  std::vector<Scalar> f1(3), f2(3);  // coefficients in basis coordinates
  if (rk == 1) {
    // perfect square: a*x^2 + 2b*xy + c*y^2 with b^2 = ac
    if (!a.is_zero()) {
      if (!a.is_rational())
        throw TowerError("rank2_split: leading scalar outside the base field");
      Scalar r = Scalar::sqrt_rational(a.re());
      out.delta = r.delta();
      f1 = {r, b / r, Scalar()};
      f2 = f1;
    } else if (!c.is_zero()) {
      if (!c.is_rational())
        throw TowerError("rank2_split: leading scalar outside the base field");
      Scalar r = Scalar::sqrt_rational(c.re());
      out.delta = r.delta();
      f1 = {Scalar(), r, Scalar()};
      f2 = f1;
    } else {
      throw GeometryError("rank2_split: inconsistent rank-1 form");
    }
  } else if (a.is_zero() && c.is_zero()) {
    // 2b*x*y
    f1 = {Scalar(2) * b, Scalar(), Scalar()};
    f2 = {Scalar(), Scalar(1), Scalar()};
  } else if (a.is_zero()) {
    // y * (2b*x + c*y)
    f1 = {Scalar(), Scalar(1), Scalar()};
    f2 = {Scalar(2) * b, c, Scalar()};
  } else {
    // a(x - r1*y)(x - r2*y), roots of a*t^2 + 2b*t + c
    Scalar disc = b * b - a * c;
    if (!disc.is_rational())
      throw TowerError("rank2_split: discriminant outside the base field");
    Scalar root = Scalar::sqrt_rational(disc.re());
    out.delta = root.delta();
    Scalar r1 = (-b + root) / a;
    Scalar r2 = (-b - root) / a;
    f1 = {a, -(a * r1), Scalar()};
    f2 = {Scalar(1), -r2, Scalar()};
  }

  // Map the binary linear forms back through the basis change: the form in
  // original coordinates X is L(B^{-1} X), so coefficients pick up B^{-1}.
  Matrix binv = basis.inverse();
  out.l1.assign(3, Scalar());
  out.l2.assign(3, Scalar());
  for (int j = 0; j < 3; ++j)
    for (int i = 0; i < 3; ++i) {
      out.l1[j] += f1[i] * binv.at(i, j);
      out.l2[j] += f2[i] * binv.at(i, j);
    }
  return out;
}

}  // namespace linegeo
