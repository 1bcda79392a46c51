#pragma once

// Dense matrices and Gaussian elimination over an exact field. Used with
// Rational for group elements and with RatFunc for polynomial forms, whose
// generic behaviour lives over the function field Q(x).

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "gitss/error.hpp"
#include "gitss/exactmath.hpp"

namespace gitss {

template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T{})
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T{1};
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Matrix transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  Matrix columns(const std::vector<std::size_t>& which) const {
    Matrix m(rows_, which.size());
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t j = 0; j < which.size(); ++j) m(r, j) = (*this)(r, which[j]);
    return m;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    require(a.cols_ == b.rows_, ErrorCode::DimensionMismatch, "matrix product shapes");
    Matrix p(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a(i, k) == T{}) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) p(i, j) += a(i, k) * b(k, j);
      }
    return p;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

  bool is_zero() const {
    for (const auto& v : data_)
      if (!(v == T{})) return false;
    return true;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

/// Element of Q(x): numerator/denominator in lowest terms, monic denominator.
class RatFunc {
 public:
  RatFunc() = default;
  RatFunc(int c) : num_(UniPoly::constant(c)), den_(UniPoly::constant(1)) {}
  RatFunc(UniPoly p) : num_(std::move(p)), den_(UniPoly::constant(1)) {}
  RatFunc(UniPoly num, UniPoly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

  const UniPoly& num() const { return num_; }
  const UniPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
  }
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
  }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return {a.num_ * b.num_, a.den_ * b.den_};
  }
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    require(!b.is_zero(), ErrorCode::SingularMatrix, "division by zero rational function");
    return {a.num_ * b.den_, a.den_ * b.num_};
  }
  friend RatFunc operator-(const RatFunc& a) { return {-a.num_, a.den_}; }
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }

  friend bool operator==(const RatFunc&, const RatFunc&) = default;

 private:
  void normalize() {
    require(!den_.is_zero(), ErrorCode::SingularMatrix, "zero denominator");
    if (num_.is_zero()) {
      den_ = UniPoly::constant(1);
      return;
    }
    UniPoly g = gcd(num_, den_);
    num_ = divmod(num_, g).first;
    den_ = divmod(den_, g).first;
    Rational lead = den_.leading();
    num_ *= Rational(1) / lead;
    den_ *= Rational(1) / lead;
  }

  UniPoly num_;
  UniPoly den_ = UniPoly::constant(1);
};

template <typename T>
bool is_zero_element(const T& v) {
  return v == T{};
}

/// Reduced row echelon form in place; returns pivot columns.
template <typename T>
std::vector<std::size_t> row_reduce(Matrix<T>& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::optional<std::size_t> pivot;
    for (std::size_t r = row; r < m.rows(); ++r)
      if (!is_zero_element(m(r, col))) {
        pivot = r;
        break;
      }
    if (!pivot) continue;
    if (*pivot != row)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(row, c), m(*pivot, c));
    T inv = T{1} / m(row, col);
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) = m(row, c) * inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || is_zero_element(m(r, col))) continue;
      T factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) = m(r, c) - factor * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <typename T>
std::size_t rank_of(Matrix<T> m) {
  return row_reduce(m).size();
}

template <typename T>
T determinant(Matrix<T> m) {
  require(m.rows() == m.cols(), ErrorCode::DimensionMismatch, "determinant of non-square matrix");
  T det{1};
  const std::size_t n = m.rows();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && is_zero_element(m(pivot, col))) ++pivot;
    if (pivot == n) return T{};
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(m(col, c), m(pivot, c));
      det = T{} - det;
    }
    det = det * m(col, col);
    T inv = T{1} / m(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (is_zero_element(m(r, col))) continue;
      T factor = m(r, col) * inv;
      for (std::size_t c = col; c < n; ++c) m(r, c) = m(r, c) - factor * m(col, c);
    }
  }
  return det;
}

/// Basis of the right kernel, one column per basis vector.
template <typename T>
Matrix<T> kernel_basis(Matrix<T> m) {
  const std::size_t n = m.cols();
  auto pivots = row_reduce(m);
  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < n; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  Matrix<T> basis(n, free_cols.size());
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    basis(free_cols[k], k) = T{1};
    for (std::size_t i = 0; i < pivots.size(); ++i) basis(pivots[i], k) = T{} - m(i, free_cols[k]);
  }
  return basis;
}

/// Column indices forming a basis of the column span.
template <typename T>
std::vector<std::size_t> independent_columns(Matrix<T> m) {
  return row_reduce(m);
}

}  // namespace gitss
