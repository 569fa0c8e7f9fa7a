#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace toda {

// Dense row-major matrix over a commutative ring T.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols, const T& fill = T()) : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows * cols), fill) {}

  static Matrix identity(int n) {
    Matrix m(n, n, T(0));
    for (int i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  T& operator()(int i, int j) { return data_[static_cast<size_t>(i * cols_ + j)]; }
  const T& operator()(int i, int j) const { return data_[static_cast<size_t>(i * cols_ + j)]; }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  template <typename F>
  auto map(F&& f) const -> Matrix<decltype(f(std::declval<const T&>()))> {
    Matrix<decltype(f(std::declval<const T&>()))> out(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) out(i, j) = f((*this)(i, j));
    return out;
  }

  // Rows and columns given as 0-based index lists.
  Matrix submatrix(const std::vector<int>& row_idx, const std::vector<int>& col_idx) const {
    Matrix s(static_cast<int>(row_idx.size()), static_cast<int>(col_idx.size()));
    for (size_t i = 0; i < row_idx.size(); ++i)
      for (size_t j = 0; j < col_idx.size(); ++j)
        s(static_cast<int>(i), static_cast<int>(j)) = (*this)(row_idx[i], col_idx[j]);
    return s;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix dimension mismatch");
    Matrix c(a.rows_, b.cols_, T(0));
    for (int i = 0; i < a.rows_; ++i)
      for (int l = 0; l < a.cols_; ++l) {
        const T& x = a(i, l);
        if (x == T(0)) continue;
        for (int j = 0; j < b.cols_; ++j) c(i, j) += x * b(l, j);
      }
    return c;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) {
    for (size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
    return a;
  }

  friend Matrix operator-(Matrix a, const Matrix& b) {
    for (size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
    return a;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<T> data_;
};

// Division-free determinant by Laplace expansion memoized over column
// subsets: O(n 2^n) ring operations. Works over any commutative ring, which
// is what the ZExpr and Poly matrices need.
template <typename T>
T determinant_by_expansion(const Matrix<T>& m) {
  if (!m.square()) throw std::invalid_argument("determinant of a non-square matrix");
  const int n = m.rows();
  if (n == 0) return T(1);
  if (n > 24) throw std::invalid_argument("expansion determinant limited to n <= 24");
  const uint32_t full = (1u << n) - 1;
  std::vector<T> minors(static_cast<size_t>(full) + 1, T(0));
  minors[0] = T(1);
  for (uint32_t mask = 1; mask <= full; ++mask) {
    const int r = __builtin_popcount(mask) - 1;  // row being expanded
    T acc(0);
    int above = 0;  // columns of mask greater than c
    for (int c = n - 1; c >= 0; --c) {
      if (!(mask & (1u << c))) continue;
      const T& sub = minors[mask & ~(1u << c)];
      if (!(sub == T(0)) && !(m(r, c) == T(0))) {
        if (above % 2 == 0) {
          acc += m(r, c) * sub;
        } else {
          acc -= m(r, c) * sub;
        }
      }
      ++above;
    }
    minors[mask] = std::move(acc);
  }
  return minors[full];
}

}  // namespace toda
