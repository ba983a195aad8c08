#include "tnnlag/quadratic.hpp"

#include <cmath>

#include "tnnlag/error.hpp"

namespace tnnlag {

namespace {

const Rational& common_d(const QuadraticNumber& x, const QuadraticNumber& y) {
  if (x.is_rational()) return y.d();
  if (y.is_rational() || x.d() == y.d()) return x.d();
  throw Error(ErrorKind::ShapeMismatch, "quadratic numbers from different fields");
}

}  // namespace

bool rational_sqrt(const Rational& q, Rational& root) {
  if (sgn(q) < 0) return false;
  mpz_class n = q.get_num(), d = q.get_den();
  mpz_class rn = sqrt(n), rd = sqrt(d);
  if (rn * rn != n || rd * rd != d) return false;
  root = Rational(rn, rd);
  root.canonicalize();
  return true;
}

QuadraticNumber::QuadraticNumber(Rational a, Rational b, Rational d) : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {
  if (sgn(d_) < 0) throw Error(ErrorKind::ShapeMismatch, "negative radicand");
  Rational r;
  if (rational_sqrt(d_, r)) {
    a_ += b_ * r;
    b_ = 0;
  }
  if (sgn(b_) == 0) d_ = 0;
}

int QuadraticNumber::sign() const {
  int s = sgn(a_), t = sgn(b_);
  if (t == 0) return s;
  if (s == 0 || s == t) return t;
  Rational lhs = a_ * a_, rhs = b_ * b_ * d_;
  int c = cmp(lhs, rhs);
  return c > 0 ? s : c < 0 ? t : 0;
}

double QuadraticNumber::approx() const { return a_.get_d() + b_.get_d() * std::sqrt(d_.get_d()); }

std::string QuadraticNumber::str() const {
  if (is_rational()) return to_string(a_);
  return to_string(a_) + (sgn(b_) > 0 ? " + " : " - ") + to_string(abs(b_)) + "*sqrt(" + to_string(d_) + ")";
}

QuadraticNumber QuadraticNumber::operator-() const { return QuadraticNumber(-a_, -b_, d_); }

QuadraticNumber operator+(const QuadraticNumber& x, const QuadraticNumber& y) {
  const Rational& d = common_d(x, y);
  return QuadraticNumber(x.a_ + y.a_, x.b_ + y.b_, d);
}

QuadraticNumber operator-(const QuadraticNumber& x, const QuadraticNumber& y) { return x + (-y); }

QuadraticNumber operator*(const QuadraticNumber& x, const QuadraticNumber& y) {
  const Rational& d = common_d(x, y);
  return QuadraticNumber(x.a_ * y.a_ + x.b_ * y.b_ * d, x.a_ * y.b_ + x.b_ * y.a_, d);
}

QuadraticNumber operator/(const QuadraticNumber& x, const QuadraticNumber& y) {
  if (y.is_zero()) throw Error(ErrorKind::ShapeMismatch, "division by zero");
  const Rational& d = common_d(x, y);
  Rational n = y.a_ * y.a_ - y.b_ * y.b_ * d;
  QuadraticNumber conj(y.a_ / n, -y.b_ / n, d);
  return x * conj;
}

}  // namespace tnnlag
