#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qsym/error.hpp"
#include "qsym/scalar/traits.hpp"
#include "qsym/simd/kernels.hpp"

namespace qsym {

/// Dense row-major matrix over a scalar field T.
template <class T>
class Matrix {
 public:
  using Tr = ScalarTraits<T>;

  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), a_(rows * cols, T()) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<T> data)
      : r_(rows), c_(cols), a_(std::move(data)) {
    if (a_.size() != r_ * c_) throw InvalidInput("matrix data size mismatch");
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  bool square() const { return r_ == c_; }
  T& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }
  const std::vector<T>& data() const { return a_; }
  std::vector<T>& data() { return a_; }

  Matrix& operator+=(const Matrix& o) {
    check_same(o);
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same(o);
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
    return *this;
  }
  Matrix& operator*=(const T& s) {
    for (auto& x : a_) x *= s;
    return *this;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const T& s) { return a *= s; }
  friend Matrix operator*(const T& s, Matrix a) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b) { return matmul(a, b); }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_;
  }

  static Matrix matmul(const Matrix& a, const Matrix& b) {
    if (a.c_ != b.r_)
      throw InvalidInput("matmul shape mismatch " + a.shape() + " * " + b.shape());
    Matrix c(a.r_, b.c_);
    if constexpr (std::is_same_v<T, Complex>) {
      simd::cgemm(a.r_, b.c_, a.c_, a.a_.data(), b.a_.data(), c.a_.data());
    } else {
      for (std::size_t i = 0; i < a.r_; ++i)
        for (std::size_t p = 0; p < a.c_; ++p) {
          const T& aip = a(i, p);
          if (Tr::is_zero(aip, 0.0)) continue;
          for (std::size_t j = 0; j < b.c_; ++j) {
            const T& bpj = b(p, j);
            if (Tr::is_zero(bpj, 0.0)) continue;
            c(i, j) += aip * bpj;
          }
        }
    }
    return c;
  }

  /// Kronecker product, first factor most significant.
  static Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix k(a.r_ * b.r_, a.c_ * b.c_);
    for (std::size_t i = 0; i < a.r_; ++i)
      for (std::size_t j = 0; j < a.c_; ++j) {
        const T& aij = a(i, j);
        if (Tr::is_zero(aij, 0.0)) continue;
        for (std::size_t p = 0; p < b.r_; ++p)
          for (std::size_t q = 0; q < b.c_; ++q) k(i * b.r_ + p, j * b.c_ + q) = aij * b(p, q);
      }
    return k;
  }

  Matrix adjoint() const {
    Matrix m(c_, r_);
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t j = 0; j < c_; ++j) m(j, i) = Tr::conj((*this)(i, j));
    return m;
  }
  Matrix transpose() const {
    Matrix m(c_, r_);
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t j = 0; j < c_; ++j) m(j, i) = (*this)(i, j);
    return m;
  }
  Matrix conj() const {
    Matrix m = *this;
    for (auto& x : m.a_) x = Tr::conj(x);
    return m;
  }

  T trace() const {
    if (!square()) throw InvalidInput("trace of non-square matrix");
    T t = T();
    for (std::size_t i = 0; i < r_; ++i) t += (*this)(i, i);
    return t;
  }

  /// Frobenius inner product sum conj(a_ij) b_ij.
  static T inner(const Matrix& a, const Matrix& b) {
    a.check_same(b);
    if constexpr (std::is_same_v<T, Complex>) {
      return simd::cdotc(a.a_.size(), a.a_.data(), b.a_.data());
    } else {
      T s = T();
      for (std::size_t k = 0; k < a.a_.size(); ++k) s += Tr::conj(a.a_[k]) * b.a_[k];
      return s;
    }
  }

  /// Largest entry magnitude; for exact fields 0 or 1.
  double max_abs() const {
    double m = 0.0;
    for (const auto& x : a_) m = std::max(m, Tr::magnitude(x));
    return m;
  }
  bool is_zero(double tol) const {
    for (const auto& x : a_)
      if (!Tr::is_zero(x, tol)) return false;
    return true;
  }

  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    Matrix m(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) m(i, j) = (*this)(r0 + i, c0 + j);
    return m;
  }
  void set_block(std::size_t r0, std::size_t c0, const Matrix& m) {
    for (std::size_t i = 0; i < m.r_; ++i)
      for (std::size_t j = 0; j < m.c_; ++j) (*this)(r0 + i, c0 + j) = m(i, j);
  }
  /// Column-stacking of the row-major entries.
  Matrix vec() const { return Matrix(r_ * c_, 1, a_); }

  std::string shape() const { return std::to_string(r_) + "x" + std::to_string(c_); }

 private:
  void check_same(const Matrix& o) const {
    if (r_ != o.r_ || c_ != o.c_) throw InvalidInput("shape mismatch " + shape() + " vs " + o.shape());
  }
  std::size_t r_ = 0, c_ = 0;
  std::vector<T> a_;
};

/// Row reduction result: reduced echelon form and pivot columns.
template <class T>
struct Rref {
  Matrix<T> r;
  std::vector<std::size_t> pivots;
};

/// Gauss-Jordan elimination. Float: partial pivoting, entries below tol*scale treated as zero.
/// Exact: first nonzero pivot, tol ignored.
template <class T>
Rref<T> rref(Matrix<T> m, double tol) {
  using Tr = ScalarTraits<T>;
  const double scale = std::max(1.0, m.max_abs());
  const double eps = Tr::exact ? 0.0 : tol * scale;
  std::vector<std::size_t> piv;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t best = m.rows();
    if constexpr (Tr::exact) {
      for (std::size_t i = row; i < m.rows(); ++i)
        if (!Tr::is_zero(m(i, col), 0.0)) {
          best = i;
          break;
        }
    } else {
      double bm = eps;
      for (std::size_t i = row; i < m.rows(); ++i) {
        double v = Tr::magnitude(m(i, col));
        if (v > bm) {
          bm = v;
          best = i;
        }
      }
    }
    if (best == m.rows()) {
      if constexpr (!Tr::exact)
        for (std::size_t i = row; i < m.rows(); ++i) m(i, col) = T();
      continue;
    }
    if (best != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(row, j), m(best, j));
    T inv = T(1) / m(row, col);
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row) continue;
      T f = m(i, col);
      if (Tr::is_zero(f, 0.0)) continue;
      for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
    }
    piv.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(piv)};
}

template <class T>
std::size_t rank(const Matrix<T>& m, double tol) {
  return rref(m, tol).pivots.size();
}

/// Solves A X = B for square invertible A.
template <class T>
Matrix<T> solve(const Matrix<T>& a, const Matrix<T>& b, double tol) {
  if (!a.square() || a.rows() != b.rows()) throw InvalidInput("solve shape mismatch");
  const std::size_t n = a.rows();
  Matrix<T> aug(n, n + b.cols());
  aug.set_block(0, 0, a);
  aug.set_block(0, n, b);
  auto red = rref(std::move(aug), tol);
  if (red.pivots.size() < n || red.pivots[n - 1] != n - 1)
    throw NumericalError("singular matrix in solve (" + a.shape() + ")");
  return red.r.block(0, n, n, b.cols());
}

template <class T>
Matrix<T> inverse(const Matrix<T>& a, double tol) {
  return solve(a, Matrix<T>::identity(a.rows()), tol);
}

/// Indices of a maximal independent subset of columns, scanning left to right.
template <class T>
std::vector<std::size_t> independent_columns(const Matrix<T>& m, double tol) {
  return rref(m, tol).pivots;
}

/// Basis of the right nullspace, one column per free variable.
template <class T>
Matrix<T> nullspace(const Matrix<T>& m, double tol) {
  auto red = rref(m, tol);
  std::vector<bool> is_piv(m.cols(), false);
  for (auto p : red.pivots) is_piv[p] = true;
  std::vector<std::size_t> freev;
  for (std::size_t j = 0; j < m.cols(); ++j)
    if (!is_piv[j]) freev.push_back(j);
  Matrix<T> ns(m.cols(), freev.size());
  for (std::size_t f = 0; f < freev.size(); ++f) {
    ns(freev[f], f) = T(1);
    for (std::size_t r = 0; r < red.pivots.size(); ++r) ns(red.pivots[r], f) = -red.r(r, freev[f]);
  }
  return ns;
}

}  // namespace qsym
