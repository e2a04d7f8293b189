#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rankiw/core/poly.hpp"

namespace rankiw {

/// Dense row-major matrix over an exact field.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, T(0)) {}
  Matrix(size_t rows, size_t cols, std::vector<T> entries)
      : rows_(rows), cols_(cols), a_(std::move(entries)) {
    require_domain(a_.size() == rows * cols, "matrix entry count does not match shape");
  }

  static Matrix identity(size_t n) {
    Matrix m(n, n);
    for (size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
    size_t r = rows.size(), c = r ? rows[0].size() : 0;
    Matrix m(r, c);
    for (size_t i = 0; i < r; ++i) {
      require_domain(rows[i].size() == c, "ragged matrix rows");
      for (size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  static Matrix from_columns(const std::vector<std::vector<T>>& cols, size_t nrows) {
    Matrix m(nrows, cols.size());
    for (size_t j = 0; j < cols.size(); ++j) {
      require_domain(cols[j].size() == nrows, "column length mismatch");
      for (size_t i = 0; i < nrows; ++i) m(i, j) = cols[j][i];
    }
    return m;
  }

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  T& operator()(size_t i, size_t j) { return a_[i * cols_ + j]; }
  const T& operator()(size_t i, size_t j) const { return a_[i * cols_ + j]; }

  std::vector<T> column(size_t j) const {
    std::vector<T> c(rows_);
    for (size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }
  std::vector<T> row(size_t i) const {
    return std::vector<T>(a_.begin() + static_cast<long>(i * cols_),
                          a_.begin() + static_cast<long>((i + 1) * cols_));
  }

  bool is_zero() const {
    for (const auto& v : a_)
      if (v != 0) return false;
    return true;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    require_domain(a.rows_ == b.rows_ && a.cols_ == b.cols_, "matrix shape mismatch in +");
    Matrix r = a;
    for (size_t k = 0; k < r.a_.size(); ++k) r.a_[k] += b.a_[k];
    return r;
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    require_domain(a.rows_ == b.rows_ && a.cols_ == b.cols_, "matrix shape mismatch in -");
    Matrix r = a;
    for (size_t k = 0; k < r.a_.size(); ++k) r.a_[k] -= b.a_[k];
    return r;
  }
  friend Matrix operator*(const T& s, const Matrix& a) {
    Matrix r = a;
    for (auto& v : r.a_) v *= s;
    return r;
  }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    require_domain(a.cols_ == b.rows_, "matrix shape mismatch in *");
    Matrix r(a.rows_, b.cols_);
    for (size_t i = 0; i < a.rows_; ++i)
      for (size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik == 0) continue;
        for (size_t j = 0; j < b.cols_; ++j) r(i, j) += aik * b(k, j);
      }
    return r;
  }
  friend std::vector<T> operator*(const Matrix& a, const std::vector<T>& v) {
    require_domain(a.cols_ == v.size(), "matrix-vector shape mismatch");
    std::vector<T> r(a.rows_, T(0));
    for (size_t i = 0; i < a.rows_; ++i)
      for (size_t k = 0; k < a.cols_; ++k)
        if (v[k] != 0) r[i] += a(i, k) * v[k];
    return r;
  }

  Matrix select_rows(const std::vector<size_t>& idx) const {
    Matrix r(idx.size(), cols_);
    for (size_t i = 0; i < idx.size(); ++i)
      for (size_t j = 0; j < cols_; ++j) r(i, j) = (*this)(idx[i], j);
    return r;
  }

  static Matrix vstack(const Matrix& a, const Matrix& b) {
    if (a.rows_ == 0) return b;
    require_domain(a.cols_ == b.cols_, "vstack column mismatch");
    Matrix r(a.rows_ + b.rows_, a.cols_);
    std::copy(a.a_.begin(), a.a_.end(), r.a_.begin());
    std::copy(b.a_.begin(), b.a_.end(), r.a_.begin() + static_cast<long>(a.a_.size()));
    return r;
  }

  // In-place reduced row echelon form; pivot columns are chosen as the first
  // nonzero entry in column order. Returns the pivot columns.
  std::vector<size_t> rref_in_place() {
    std::vector<size_t> pivots;
    size_t r = 0;
    for (size_t c = 0; c < cols_ && r < rows_; ++c) {
      size_t piv = r;
      while (piv < rows_ && (*this)(piv, c) == 0) ++piv;
      if (piv == rows_) continue;
      if (piv != r)
        for (size_t j = 0; j < cols_; ++j) std::swap((*this)(piv, j), (*this)(r, j));
      T inv = T(1) / (*this)(r, c);
      for (size_t j = c; j < cols_; ++j) (*this)(r, j) *= inv;
      for (size_t i = 0; i < rows_; ++i) {
        if (i == r || (*this)(i, c) == 0) continue;
        T f = (*this)(i, c);
        for (size_t j = c; j < cols_; ++j) (*this)(i, j) -= f * (*this)(r, j);
      }
      pivots.push_back(c);
      ++r;
    }
    return pivots;
  }

  std::pair<Matrix, std::vector<size_t>> rref() const {
    Matrix m = *this;
    auto piv = m.rref_in_place();
    return {std::move(m), std::move(piv)};
  }

  size_t rank() const { return rref().second.size(); }

 private:
  size_t rows_ = 0, cols_ = 0;
  std::vector<T> a_;
};

using QMatrix = Matrix<Rational>;
using QVector = std::vector<Rational>;

/// A subspace of Q^n given by a column basis whose rows at `key_rows`
/// form the identity. Restricting an invariant operator is then a row pick.
struct Subspace {
  QMatrix basis;                // n x d
  std::vector<size_t> key_rows; // size d

  size_t ambient_dim() const { return basis.rows(); }
  size_t dim() const { return basis.cols(); }
};

// Right kernel {v : A v = 0} in the canonical RREF basis (one vector per free column).
inline Subspace kernel(const QMatrix& a) {
  auto [r, piv] = a.rref();
  std::vector<bool> is_pivot(a.cols(), false);
  for (size_t c : piv) is_pivot[c] = true;
  std::vector<size_t> free;
  for (size_t c = 0; c < a.cols(); ++c)
    if (!is_pivot[c]) free.push_back(c);
  QMatrix basis(a.cols(), free.size());
  for (size_t k = 0; k < free.size(); ++k) {
    basis(free[k], k) = 1;
    for (size_t i = 0; i < piv.size(); ++i) basis(piv[i], k) = -r(i, free[k]);
  }
  return {std::move(basis), std::move(free)};
}

// Matrix of an operator A (acting on columns) restricted to an A-invariant subspace.
inline QMatrix restrict_to(const QMatrix& a, const Subspace& s) {
  return (a * s.basis).select_rows(s.key_rows);
}

// Express a subspace-of-a-subspace in ambient coordinates.
inline Subspace compose(const Subspace& outer, const Subspace& inner) {
  QMatrix basis = outer.basis * inner.basis;
  // key rows: rows of outer.basis that are identity rows, selected by inner key rows
  std::vector<size_t> keys;
  for (size_t k : inner.key_rows) keys.push_back(outer.key_rows[k]);
  return {std::move(basis), std::move(keys)};
}

enum class SolveStatus { unique, no_solution, underdetermined };

struct SolveResult {
  SolveStatus status;
  QVector solution;                  // particular solution (free variables set to 0)
  std::vector<size_t> undetermined;  // coordinates not fixed by the system
};

inline SolveResult solve_exact(const QMatrix& a, const QVector& b) {
  require_domain(a.rows() == b.size(), "solve_exact: right-hand side length mismatch");
  QMatrix aug(a.rows(), a.cols() + 1);
  for (size_t i = 0; i < a.rows(); ++i) {
    for (size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  auto piv = aug.rref_in_place();
  SolveResult res{SolveStatus::unique, QVector(a.cols(), Rational(0)), {}};
  if (!piv.empty() && piv.back() == a.cols()) {
    res.status = SolveStatus::no_solution;
    res.solution.clear();
    return res;
  }
  std::vector<bool> is_pivot(a.cols(), false);
  for (size_t i = 0; i < piv.size(); ++i) {
    is_pivot[piv[i]] = true;
    res.solution[piv[i]] = aug(i, a.cols());
  }
  for (size_t c = 0; c < a.cols(); ++c)
    if (!is_pivot[c]) res.undetermined.push_back(c);
  if (!res.undetermined.empty()) res.status = SolveStatus::underdetermined;
  return res;
}

// Characteristic polynomial det(xI - A) via Hessenberg reduction.
inline UniPoly charpoly(const QMatrix& a) {
  require_domain(a.is_square(), "charpoly of a non-square matrix");
  const size_t n = a.rows();
  QMatrix h = a;
  for (size_t m = 1; m + 1 < n; ++m) {
    size_t i = m;
    while (i < n && h(i, m - 1) == 0) ++i;
    if (i == n) continue;
    if (i != m) {
      for (size_t j = 0; j < n; ++j) std::swap(h(i, j), h(m, j));
      for (size_t j = 0; j < n; ++j) std::swap(h(j, i), h(j, m));
    }
    for (size_t r = m + 1; r < n; ++r) {
      if (h(r, m - 1) == 0) continue;
      Rational u = h(r, m - 1) / h(m, m - 1);
      for (size_t j = 0; j < n; ++j) h(r, j) -= u * h(m, j);
      for (size_t j = 0; j < n; ++j) h(j, m) += u * h(j, r);
    }
  }
  // p_k = charpoly of the leading k x k block.
  std::vector<UniPoly> p(n + 1);
  p[0] = UniPoly::constant(1);
  for (size_t k = 1; k <= n; ++k) {
    p[k] = (UniPoly::x() - UniPoly::constant(h(k - 1, k - 1))) * p[k - 1];
    Rational prod = 1;
    for (size_t i = k - 1; i-- > 0;) {
      prod *= h(i + 1, i);
      if (prod == 0) break;
      p[k] = p[k] - (prod * h(i, k - 1)) * p[i];
    }
  }
  return p[n];
}

// f(A) by Horner.
inline QMatrix eval_poly(const UniPoly& f, const QMatrix& a) {
  require_domain(a.is_square(), "polynomial of a non-square matrix");
  QMatrix acc(a.rows(), a.cols());
  QMatrix id = QMatrix::identity(a.rows());
  for (int i = f.degree(); i >= 0; --i) acc = acc * a + f.coeff(i) * id;
  return acc;
}

inline Rational dot(const QVector& a, const QVector& b) {
  Rational s = 0;
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
  return s;
}

}  // namespace rankiw
