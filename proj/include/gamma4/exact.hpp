#pragma once

// Exact integer and rational linear algebra over GMP numbers.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace gamma4::exact {

using Integer = mpz_class;
using Rational = mpq_class;

class MatrixError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

class SingularMatrixError : public MatrixError {
public:
  using MatrixError::MatrixError;
};

/// Dense row-major matrix of exact numbers.
template <typename T>
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

  /// Row-list construction; every row must have the same length.
  Matrix(std::initializer_list<std::initializer_list<long>> rows);

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool symmetric() const {
    if (!square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i + 1; j < cols_; ++j)
        if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw MatrixError("matrix product: dimension mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a(i, k) == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
      }
    return c;
  }

  Matrix operator-() const {
    Matrix m = *this;
    for (auto& x : m.data_) x = -x;
    return m;
  }

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

template <typename T>
Matrix<T>::Matrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw MatrixError("ragged matrix literal");
    for (long v : row) data_.emplace_back(v);
  }
}

using IntMatrix = Matrix<Integer>;
using RationalMatrix = Matrix<Rational>;

RationalMatrix to_rational(const IntMatrix& m);

/// Unimodular U, V with U * M * V = D, D diagonal with d1 | d2 | ... and d_i >= 0.
struct SNFResult {
  IntMatrix U;
  IntMatrix V;
  IntMatrix D;

  /// Diagonal of D (length min(rows, cols)).
  std::vector<Integer> diagonal() const;
};

/// Fraction-free (Bareiss) elimination. det of the 0x0 matrix is 1.
Integer det(const IntMatrix& m);

/// Laplace expansion; only for small matrices (n <= 8).
Integer det_cofactor(const IntMatrix& m);

RationalMatrix inverse(const IntMatrix& m);

/// Inverse of a unimodular integer matrix, kept integral.
IntMatrix unimodular_inverse(const IntMatrix& m);

SNFResult smith_normal_form(const IntMatrix& m);

/// Rank over Q.
std::size_t rank(const IntMatrix& m);

/// (#positive - #negative) eigenvalues of a nonsingular symmetric matrix, by
/// rational congruence diagonalisation.
int signature(const IntMatrix& m);

std::string to_string(const Rational& q);
std::string to_string(const IntMatrix& m);

}  // namespace gamma4::exact
