#pragma once

#include <cstddef>
#include <vector>

#include "ctoda/exact_scalar.hpp"

namespace ctoda {

inline Rat field_inv(const Rat& v) {
  if (v == 0) throw EngineError("division by zero");
  return Rat(1) / v;
}
inline ExactScalar field_inv(const ExactScalar& v) { return v.inverse(); }
inline bool field_is_zero(const Rat& v) { return v == 0; }
inline bool field_is_zero(const ExactScalar& v) { return v.is_zero(); }

/// Dense matrix over an exact field (Rat or ExactScalar). Sizes here stay
/// tiny (<= dim g = 15), so everything is straightforward Gaussian algebra.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, T()) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  bool operator==(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (std::size_t k = 0; k < a_.size(); ++k)
      if (!field_is_zero(a_[k] - o.a_[k])) return false;
    return true;
  }

  Matrix operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw EngineError("Matrix: dimension mismatch in product");
    Matrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const T& aik = (*this)(i, k);
        if (field_is_zero(aik)) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += aik * o(k, j);
      }
    return r;
  }

  Matrix operator+(const Matrix& o) const {
    Matrix r = *this;
    for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] += o.a_[k];
    return r;
  }

  Matrix operator-(const Matrix& o) const {
    Matrix r = *this;
    for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] -= o.a_[k];
    return r;
  }

  Matrix scaled(const T& c) const {
    Matrix r = *this;
    for (auto& v : r.a_) v *= c;
    return r;
  }

  std::vector<T> apply(const std::vector<T>& v) const {
    if (v.size() != cols_) throw EngineError("Matrix: dimension mismatch in apply");
    std::vector<T> r(rows_, T());
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (!field_is_zero((*this)(i, j))) r[i] += (*this)(i, j) * v[j];
    return r;
  }

  T trace() const {
    T t{};
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
  }

  /// Row-reduces in place; returns the rank and fills pivot column indices.
  std::size_t rref(std::vector<std::size_t>* pivots = nullptr) {
    std::size_t r = 0;
    if (pivots) pivots->clear();
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
      std::size_t p = r;
      while (p < rows_ && field_is_zero((*this)(p, c))) ++p;
      if (p == rows_) continue;
      for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(p, j), (*this)(r, j));
      const T inv = field_inv((*this)(r, c));
      for (std::size_t j = 0; j < cols_; ++j) (*this)(r, j) *= inv;
      for (std::size_t i = 0; i < rows_; ++i) {
        if (i == r || field_is_zero((*this)(i, c))) continue;
        const T f = (*this)(i, c);
        for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) -= f * (*this)(r, j);
      }
      if (pivots) pivots->push_back(c);
      ++r;
    }
    return r;
  }

  std::size_t rank() const {
    Matrix m = *this;
    return m.rref();
  }

  /// Basis of the right kernel, one vector per free column.
  std::vector<std::vector<T>> kernel() const {
    Matrix m = *this;
    std::vector<std::size_t> piv;
    m.rref(&piv);
    std::vector<bool> is_pivot(cols_, false);
    for (auto c : piv) is_pivot[c] = true;
    std::vector<std::vector<T>> basis;
    for (std::size_t c = 0; c < cols_; ++c) {
      if (is_pivot[c]) continue;
      std::vector<T> v(cols_, T());
      v[c] = T(1);
      for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -m(r, c);
      basis.push_back(std::move(v));
    }
    return basis;
  }

  T determinant() const {
    if (rows_ != cols_) throw EngineError("Matrix: determinant of non-square matrix");
    Matrix m = *this;
    T det = T(1);
    for (std::size_t c = 0; c < cols_; ++c) {
      std::size_t p = c;
      while (p < rows_ && field_is_zero(m(p, c))) ++p;
      if (p == rows_) return T();
      if (p != c) {
        for (std::size_t j = 0; j < cols_; ++j) std::swap(m(p, j), m(c, j));
        det = -det;
      }
      det *= m(c, c);
      const T inv = field_inv(m(c, c));
      for (std::size_t i = c + 1; i < rows_; ++i) {
        if (field_is_zero(m(i, c))) continue;
        const T f = m(i, c) * inv;
        for (std::size_t j = c; j < cols_; ++j) m(i, j) -= f * m(c, j);
      }
    }
    return det;
  }

  /// Leading principal minors det(A[0..k, 0..k]) for k = 0..n-1.
  std::vector<T> leading_principal_minors() const {
    std::vector<T> out;
    for (std::size_t k = 1; k <= rows_; ++k) {
      Matrix sub(k, k);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) sub(i, j) = (*this)(i, j);
      out.push_back(sub.determinant());
    }
    return out;
  }

  /// Solves A x = b; throws when the system is singular or inconsistent.
  std::vector<T> solve(const std::vector<T>& b) const {
    if (rows_ != cols_ || b.size() != rows_) throw EngineError("Matrix: solve shape mismatch");
    Matrix aug(rows_, cols_ + 1);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
      aug(i, cols_) = b[i];
    }
    std::vector<std::size_t> piv;
    const std::size_t rank = aug.rref(&piv);
    if (rank != rows_ || (rank > 0 && piv.back() == cols_))
      throw EngineError("Matrix: singular or inconsistent linear system");
    std::vector<T> x(cols_, T());
    for (std::size_t r = 0; r < rank; ++r) x[piv[r]] = aug(r, cols_);
    return x;
  }

  Matrix inverse() const {
    if (rows_ != cols_) throw EngineError("Matrix: inverse of non-square matrix");
    Matrix aug(rows_, 2 * cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
      aug(i, cols_ + i) = T(1);
    }
    std::vector<std::size_t> piv;
    aug.rref(&piv);
    if (piv.size() < rows_ || piv[rows_ - 1] >= cols_)
      throw EngineError("Matrix: inverse of singular matrix");
    Matrix inv(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) inv(i, j) = aug(i, cols_ + j);
    return inv;
  }

  /// Characteristic polynomial coefficients [c_0, ..., c_n] with
  /// det(tI - A) = c_n t^n + ... + c_0, computed by Faddeev-LeVerrier.
  std::vector<T> char_poly() const {
    if (rows_ != cols_) throw EngineError("Matrix: char_poly of non-square matrix");
    const std::size_t n = rows_;
    std::vector<T> c(n + 1, T());
    c[n] = T(1);
    Matrix M = Matrix(n, n);  // M_0 = 0
    for (std::size_t k = 1; k <= n; ++k) {
      // M_k = A * M_{k-1} + c_{n-k+1} * I
      Matrix AM = (*this) * M;
      for (std::size_t i = 0; i < n; ++i) AM(i, i) += c[n - k + 1];
      M = std::move(AM);
      Matrix P = (*this) * M;
      T tr = P.trace();
      // c_{n-k} = -tr / k  (exact division by an integer)
      c[n - k] = -(tr * field_inv(T(static_cast<int>(k))));
    }
    return c;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<T> a_;
};

using RMatrix = Matrix<Rat>;
using EMatrix = Matrix<ExactScalar>;

}  // namespace ctoda
