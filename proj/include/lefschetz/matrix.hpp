#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "lefschetz/errors.hpp"
#include "lefschetz/rational.hpp"

namespace lefschetz {

// Dense row-major matrix over an exact scalar type. K must be constructible
// from long and support field (or at least ring) arithmetic.
template <class K>
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), e_(rows * cols, K(0)) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<K> entries)
      : rows_(rows), cols_(cols), e_(std::move(entries)) {
    check_internal(e_.size() == rows_ * cols_, "matrix entry count mismatch");
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = K(1);
    return m;
  }
  static Matrix from_columns(std::size_t dim, const std::vector<std::vector<K>>& cols) {
    Matrix m(dim, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      check_internal(cols[j].size() == dim, "column length mismatch");
      for (std::size_t i = 0; i < dim; ++i) m.at(i, j) = cols[j][i];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }
  bool is_square() const { return rows_ == cols_; }

  K& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const K& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

  std::vector<K> row(std::size_t i) const {
    return std::vector<K>(e_.begin() + i * cols_, e_.begin() + (i + 1) * cols_);
  }
  std::vector<K> column(std::size_t j) const {
    std::vector<K> c;
    c.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c.push_back(at(i, j));
    return c;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  bool is_zero() const {
    for (const auto& x : e_)
      if (!(x == K(0))) return false;
    return true;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    check_internal(a.rows_ == b.rows_ && a.cols_ == b.cols_, "shape mismatch");
    Matrix r = a;
    for (std::size_t k = 0; k < r.e_.size(); ++k) r.e_[k] = r.e_[k] + b.e_[k];
    return r;
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    check_internal(a.rows_ == b.rows_ && a.cols_ == b.cols_, "shape mismatch");
    Matrix r = a;
    for (std::size_t k = 0; k < r.e_.size(); ++k) r.e_[k] = r.e_[k] - b.e_[k];
    return r;
  }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    check_internal(a.cols_ == b.rows_, "shape mismatch in product");
    Matrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a.at(i, k) == K(0)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          r.at(i, j) = r.at(i, j) + a.at(i, k) * b.at(k, j);
      }
    return r;
  }
  friend Matrix operator*(const K& s, const Matrix& m) {
    Matrix r = m;
    for (auto& x : r.e_) x = s * x;
    return r;
  }

  std::vector<K> apply(const std::vector<K>& v) const {
    check_internal(v.size() == cols_, "vector length mismatch");
    std::vector<K> r(rows_, K(0));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r[i] = r[i] + at(i, j) * v[j];
    return r;
  }

  Matrix pow(unsigned long e) const {
    check_internal(is_square(), "pow of non-square matrix");
    Matrix r = identity(rows_);
    Matrix b = *this;
    while (e > 0) {
      if (e & 1) r = r * b;
      b = b * b;
      e >>= 1;
    }
    return r;
  }

  // Horizontal concatenation [A | B].
  static Matrix hconcat(const Matrix& a, const Matrix& b) {
    if (a.empty() && a.rows_ == 0) return b;
    if (b.empty() && b.rows_ == 0) return a;
    check_internal(a.rows_ == b.rows_, "hconcat row mismatch");
    Matrix r(a.rows_, a.cols_ + b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t j = 0; j < a.cols_; ++j) r.at(i, j) = a.at(i, j);
      for (std::size_t j = 0; j < b.cols_; ++j) r.at(i, a.cols_ + j) = b.at(i, j);
    }
    return r;
  }

  Matrix submatrix(const std::vector<std::size_t>& rows,
                   const std::vector<std::size_t>& cols) const {
    Matrix r(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < cols.size(); ++j)
        r.at(i, j) = at(rows[i], cols[j]);
    return r;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<K> e_;
};

// --- generic field algorithms (K a field: exact division required) ---

struct RrefResult {
  std::vector<std::size_t> pivot_columns;
  std::size_t rank = 0;
};

// In-place reduced row echelon form by Gauss-Jordan over the field K.
template <class K>
RrefResult rref_in_place(Matrix<K>& m) {
  RrefResult res;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && m.at(piv, c) == K(0)) ++piv;
    if (piv == m.rows()) continue;
    if (piv != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(piv, j), m.at(r, j));
    K inv = K(1) / m.at(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m.at(r, j) = inv * m.at(r, j);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m.at(i, c) == K(0)) continue;
      K f = m.at(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        m.at(i, j) = m.at(i, j) - f * m.at(r, j);
    }
    res.pivot_columns.push_back(c);
    ++r;
  }
  res.rank = r;
  return res;
}

template <class K>
std::size_t rank(const Matrix<K>& m) {
  Matrix<K> c = m;
  return rref_in_place(c).rank;
}

// Basis of the right kernel {v : Mv = 0}, one vector per free column.
template <class K>
std::vector<std::vector<K>> kernel_basis(const Matrix<K>& m) {
  Matrix<K> r = m;
  RrefResult rr = rref_in_place(r);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : rr.pivot_columns) is_pivot[c] = true;
  std::vector<std::vector<K>> basis;
  for (std::size_t free_c = 0; free_c < m.cols(); ++free_c) {
    if (is_pivot[free_c]) continue;
    std::vector<K> v(m.cols(), K(0));
    v[free_c] = K(1);
    for (std::size_t p = 0; p < rr.pivot_columns.size(); ++p)
      v[rr.pivot_columns[p]] = K(0) - r.at(p, free_c);
    basis.push_back(std::move(v));
  }
  return basis;
}

// Determinant by Gaussian elimination with division; generic fallback used
// for extension fields. Rational matrices go through the Bareiss routine
// below instead.
template <class K>
K determinant_generic(const Matrix<K>& m) {
  if (!m.is_square()) throw NonSquare("determinant of non-square matrix");
  if (m.rows() == 0) return K(1);
  Matrix<K> a = m;
  K det(1);
  for (std::size_t c = 0; c < a.cols(); ++c) {
    std::size_t piv = c;
    while (piv < a.rows() && a.at(piv, c) == K(0)) ++piv;
    if (piv == a.rows()) return K(0);
    if (piv != c) {
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a.at(piv, j), a.at(c, j));
      det = K(0) - det;
    }
    det = det * a.at(c, c);
    K inv = K(1) / a.at(c, c);
    for (std::size_t i = c + 1; i < a.rows(); ++i) {
      if (a.at(i, c) == K(0)) continue;
      K f = inv * a.at(i, c);
      for (std::size_t j = c; j < a.cols(); ++j)
        a.at(i, j) = a.at(i, j) - f * a.at(c, j);
    }
  }
  return det;
}

// Solve A x = b; returns false if inconsistent. A may be rectangular with
// full column rank or not; any solution is returned if one exists.
template <class K>
bool solve_linear(const Matrix<K>& a, const std::vector<K>& b,
                  std::vector<K>* out) {
  Matrix<K> aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols()) = b[i];
  }
  RrefResult rr = rref_in_place(aug);
  for (auto c : rr.pivot_columns)
    if (c == a.cols()) return false;  // pivot in the rhs column
  std::vector<K> x(a.cols(), K(0));
  for (std::size_t p = 0; p < rr.pivot_columns.size(); ++p)
    x[rr.pivot_columns[p]] = aug.at(p, a.cols());
  if (out) *out = std::move(x);
  return true;
}

// Membership of v in the column span of B.
template <class K>
bool in_column_span(const Matrix<K>& basis, const std::vector<K>& v) {
  return solve_linear(basis, v, static_cast<std::vector<K>*>(nullptr));
}

// Matrix of the restriction of `map` to the invariant subspace spanned by the
// columns of `basis`: map * basis = basis * C. Returns false when the
// subspace is not invariant.
template <class K>
bool restriction_matrix(const Matrix<K>& map, const Matrix<K>& basis,
                        Matrix<K>* out) {
  Matrix<K> c(basis.cols(), basis.cols());
  for (std::size_t j = 0; j < basis.cols(); ++j) {
    std::vector<K> img = map.apply(basis.column(j));
    std::vector<K> x;
    if (!solve_linear(basis, img, &x)) return false;
    for (std::size_t i = 0; i < basis.cols(); ++i) c.at(i, j) = x[i];
  }
  if (out) *out = std::move(c);
  return true;
}

template <class K>
K trace(const Matrix<K>& m) {
  check_internal(m.is_square(), "trace of non-square matrix");
  K t(0);
  for (std::size_t i = 0; i < m.rows(); ++i) t = t + m.at(i, i);
  return t;
}

// --- rational / integer specific ---

using RationalMatrix = Matrix<Rational>;
using IntegerMatrix = Matrix<Integer>;

// Reduced row echelon form via fraction-free (Bareiss-style) elimination on a
// row-scaled integer matrix.
RrefResult rref(const RationalMatrix& m, RationalMatrix* out);

// Exact determinant via Bareiss fraction-free elimination.
Rational determinant(const RationalMatrix& m);
Integer determinant(const IntegerMatrix& m);

IntegerMatrix to_integer_matrix(const RationalMatrix& m);  // throws if non-integer
RationalMatrix to_rational_matrix(const IntegerMatrix& m);
bool is_integer_matrix(const RationalMatrix& m);

struct SmithNormalForm {
  IntegerMatrix u, d, v;  // u*m*v = d, u and v unimodular
};
SmithNormalForm smith_normal_form(const IntegerMatrix& m);


}  // namespace lefschetz
