#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tnnlag/rational.hpp"

namespace tnnlag {

// a + b√d with a, b rational and d > 0 rational (d = 0 marks a plain rational).
// Arithmetic between two numbers requires equal d unless one of them is rational.
class QuadraticNumber {
 public:
  QuadraticNumber() = default;
  QuadraticNumber(Rational a) : a_(std::move(a)) {}  // NOLINT: implicit from Q
  QuadraticNumber(long a) : a_(a) {}                   // NOLINT
  QuadraticNumber(Rational a, Rational b, Rational d);

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const Rational& d() const { return d_; }
  bool is_rational() const { return sgn(b_) == 0; }
  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
  int sign() const;
  double approx() const;
  std::string str() const;

  QuadraticNumber operator-() const;
  friend QuadraticNumber operator+(const QuadraticNumber& x, const QuadraticNumber& y);
  friend QuadraticNumber operator-(const QuadraticNumber& x, const QuadraticNumber& y);
  friend QuadraticNumber operator*(const QuadraticNumber& x, const QuadraticNumber& y);
  friend QuadraticNumber operator/(const QuadraticNumber& x, const QuadraticNumber& y);
  friend bool operator==(const QuadraticNumber& x, const QuadraticNumber& y) { return (x - y).is_zero(); }
  friend bool operator<(const QuadraticNumber& x, const QuadraticNumber& y) { return (x - y).sign() < 0; }

 private:
  Rational a_ = 0, b_ = 0, d_ = 0;
};

// Exact square root of a nonnegative rational, if it exists.
bool rational_sqrt(const Rational& q, Rational& root);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_zero(const QuadraticNumber& q) { return q.is_zero(); }

// Gaussian elimination over any exact field.
template <class F>
std::size_t generic_rank(std::vector<std::vector<F>> A) {
  std::size_t r = 0;
  const std::size_t rows = A.size(), cols = rows ? A[0].size() : 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && is_zero(A[p][c])) ++p;
    if (p == rows) continue;
    std::swap(A[p], A[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (is_zero(A[i][c])) continue;
      F t = A[i][c] / A[r][c];
      for (std::size_t j = c; j < cols; ++j) A[i][j] = A[i][j] - t * A[r][j];
    }
    ++r;
  }
  return r;
}

template <class F>
F generic_det(std::vector<std::vector<F>> A) {
  const std::size_t n = A.size();
  F det = F(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && is_zero(A[p][c])) ++p;
    if (p == n) return F(0);
    if (p != c) {
      std::swap(A[p], A[c]);
      det = -det;
    }
    det = det * A[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (is_zero(A[i][c])) continue;
      F t = A[i][c] / A[c][c];
      for (std::size_t j = c; j < n; ++j) A[i][j] = A[i][j] - t * A[c][j];
    }
  }
  return det;
}

}  // namespace tnnlag
