#pragma once

// Small dense matrices over an arbitrary ring (QScalar, polynomial entries,
// ...).  Determinants use the Leibniz sum and therefore assume the entries of
// the matrix commute with each other; exact elimination additionally requires
// a field.

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "qsl/combinat.hpp"

namespace qsl {

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, T fill = T(0))
      : rows_(rows), cols_(cols), a_(rows * cols, fill) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  friend bool operator==(const Matrix& x, const Matrix& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
  }
  friend bool operator!=(const Matrix& x, const Matrix& y) { return !(x == y); }

  friend Matrix operator+(const Matrix& x, const Matrix& y) {
    Matrix r = x;
    for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] += y.a_[i];
    return r;
  }
  friend Matrix operator-(const Matrix& x, const Matrix& y) {
    Matrix r = x;
    for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] -= y.a_[i];
    return r;
  }
  friend Matrix operator*(const Matrix& x, const Matrix& y) {
    if (x.cols_ != y.rows_) throw std::invalid_argument("shape mismatch");
    Matrix r(x.rows_, y.cols_);
    for (std::size_t i = 0; i < x.rows_; ++i)
      for (std::size_t k = 0; k < x.cols_; ++k) {
        const T& v = x(i, k);
        if (v == T(0)) continue;
        for (std::size_t j = 0; j < y.cols_; ++j) r(i, j) += v * y(k, j);
      }
    return r;
  }
  friend Matrix operator*(const T& c, const Matrix& y) {
    Matrix r = y;
    for (auto& v : r.a_) v = c * v;
    return r;
  }

  Matrix transposed() const {
    Matrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }

  T trace() const {
    T s(0);
    for (std::size_t i = 0; i < rows_; ++i) s += (*this)(i, i);
    return s;
  }

  bool is_zero() const {
    for (const auto& v : a_)
      if (!(v == T(0))) return false;
    return true;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<T> a_;
};

/// Leibniz determinant; valid whenever the entries commute pairwise.
template <class T>
T determinant(const Matrix<T>& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square");
  std::size_t n = m.rows();
  T out(0);
  for (const Perm& p : symmetric_group(static_cast<int>(n))) {
    T term(p.sign());
    for (std::size_t i = 0; i < n; ++i)
      term = term * m(i, static_cast<std::size_t>(p(static_cast<int>(i))));
    out += term;
  }
  return out;
}

/// Rank over a field, by fraction-free forward elimination on a copy.
template <class T>
std::size_t rank(Matrix<T> m) {
  std::size_t r = 0;
  for (std::size_t col = 0; col < m.cols() && r < m.rows(); ++col) {
    std::size_t piv = r;
    while (piv < m.rows() && m(piv, col) == T(0)) ++piv;
    if (piv == m.rows()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(r, j), m(piv, j));
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      if (m(i, col) == T(0)) continue;
      T f = m(i, col) / m(r, col);
      for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    ++r;
  }
  return r;
}

}  // namespace qsl
