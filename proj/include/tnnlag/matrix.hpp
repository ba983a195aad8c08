#pragma once

#include <cstddef>
#include <vector>

#include "tnnlag/rational.hpp"

namespace tnnlag {

// Dense exact-rational matrix, row major.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), a_(rows * cols) {}
  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<std::vector<Rational>>& rows);
  static Matrix from_ints(const std::vector<std::vector<long>>& rows);

  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  Rational& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator-() const;
  Matrix scaled(const Rational& s) const;
  bool operator==(const Matrix& o) const = default;

  Matrix transpose() const;
  // Columns given by 0-based indices, in the given order.
  Matrix columns(const std::vector<int>& idx) const;
  bool is_zero() const;

 private:
  std::size_t r_ = 0, c_ = 0;
  std::vector<Rational> a_;
};

Rational determinant(Matrix m);
std::size_t rank(Matrix m);
// Reduced row echelon form; pivot columns returned through `pivots`.
Matrix rref(Matrix m, std::vector<int>* pivots = nullptr);
// Rows form a basis of {v : m v = 0}.
Matrix kernel(const Matrix& m);

}  // namespace tnnlag
