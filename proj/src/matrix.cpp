#include "tnnlag/matrix.hpp"

#include "tnnlag/error.hpp"

namespace tnnlag {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  Matrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols()) throw Error(ErrorKind::ShapeMismatch, "ragged matrix rows");
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Matrix Matrix::from_ints(const std::vector<std::vector<long>>& rows) {
  std::vector<std::vector<Rational>> q;
  for (const auto& r : rows) {
    std::vector<Rational> row;
    for (long v : r) row.emplace_back(v);
    q.push_back(std::move(row));
  }
  return from_rows(q);
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (c_ != o.r_) throw Error(ErrorKind::ShapeMismatch, "matrix product");
  Matrix p(r_, o.c_);
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t l = 0; l < c_; ++l) {
      const Rational& x = (*this)(i, l);
      if (x == 0) continue;
      for (std::size_t j = 0; j < o.c_; ++j) p(i, j) += x * o(l, j);
    }
  return p;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (r_ != o.r_ || c_ != o.c_) throw Error(ErrorKind::ShapeMismatch, "matrix sum");
  Matrix s = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) s.a_[i] += o.a_[i];
  return s;
}

Matrix Matrix::operator-(const Matrix& o) const { return *this + (-o); }

Matrix Matrix::operator-() const { return scaled(-1); }

Matrix Matrix::scaled(const Rational& s) const {
  Matrix m = *this;
  for (auto& x : m.a_) x *= s;
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(c_, r_);
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::columns(const std::vector<int>& idx) const {
  Matrix s(r_, idx.size());
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = 0; j < idx.size(); ++j) s(i, j) = (*this)(i, static_cast<std::size_t>(idx[j]));
  return s;
}

bool Matrix::is_zero() const {
  for (const auto& x : a_)
    if (x != 0) return false;
  return true;
}

Rational determinant(Matrix m) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::ShapeMismatch, "determinant of non-square matrix");
  const std::size_t n = m.rows();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m(r, c) == 0) continue;
      Rational f = m(r, c) / m(c, c);
      for (std::size_t j = c; j < n; ++j) m(r, j) -= f * m(c, j);
    }
  }
  return det;
}

Matrix rref(Matrix m, std::vector<int>* pivots) {
  if (pivots) pivots->clear();
  std::size_t row = 0;
  for (std::size_t c = 0; c < m.cols() && row < m.rows(); ++c) {
    std::size_t p = row;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
    Rational inv = 1 / m(row, c);
    for (std::size_t j = 0; j < m.cols(); ++j) m(row, j) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, c) == 0) continue;
      Rational f = m(r, c);
      for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) -= f * m(row, j);
    }
    if (pivots) pivots->push_back(static_cast<int>(c));
    ++row;
  }
  return m;
}

std::size_t rank(Matrix m) {
  std::vector<int> piv;
  rref(std::move(m), &piv);
  return piv.size();
}

Matrix kernel(const Matrix& m) {
  std::vector<int> piv;
  Matrix r = rref(m, &piv);
  std::vector<bool> is_piv(m.cols(), false);
  for (int p : piv) is_piv[static_cast<std::size_t>(p)] = true;
  std::vector<std::size_t> free;
  for (std::size_t j = 0; j < m.cols(); ++j)
    if (!is_piv[j]) free.push_back(j);
  Matrix k(free.size(), m.cols());
  for (std::size_t t = 0; t < free.size(); ++t) {
    k(t, free[t]) = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) k(t, static_cast<std::size_t>(piv[i])) = -r(i, free[t]);
  }
  return k;
}

}  // namespace tnnlag
