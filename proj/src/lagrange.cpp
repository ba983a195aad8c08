#include "tnnlag/lagrange.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "tnnlag/error.hpp"

namespace tnnlag {

namespace {

std::size_t z(int i) { return static_cast<std::size_t>(i); }

int half(const GrassmannPoint& X) {
  if (X.m() % 2 != 0 || 2 * X.k() != X.m()) throw Error(ErrorKind::ShapeMismatch, "need a point of Gr(n, 2n)");
  return X.k();
}

int half_m(const GrassmannPoint& X) {
  if (X.m() % 2 != 0) throw Error(ErrorKind::ShapeMismatch, "need an even number of columns");
  return X.m() / 2;
}

}  // namespace

Matrix form_matrix(int n) {
  Matrix R(z(2 * n), z(2 * n));
  for (int i = 1; i <= n; ++i) {
    int s = i % 2 == 1 ? 1 : -1;
    R(z(i - 1), z(n + i - 1)) = s;
    R(z(n + i - 1), z(i - 1)) = -s;
  }
  return R;
}

IndexSet rot_index(const IndexSet& I, int n) {
  IndexSet J;
  for (int i : I) {
    if (i < 1 || i > 2 * n) throw Error(ErrorKind::IndexOutOfRange, "index " + std::to_string(i));
    J.push_back(i + n > 2 * n ? i - n : i + n);
  }
  std::sort(J.begin(), J.end());
  return J;
}

IndexSet index_involution(const IndexSet& I, int n) {
  if (static_cast<int>(I.size()) != n) throw Error(ErrorKind::ShapeMismatch, "T needs an n-subset of [2n]");
  return rot_index(complement(I, 2 * n), n);
}

bool is_isotropic(const GrassmannPoint& X) {
  int n = half(X);
  return (X.matrix() * form_matrix(n) * X.matrix().transpose()).is_zero();
}

bool is_tnn(const GrassmannPoint& X) { return X.plucker().nonnegative(); }

bool has_plucker_symmetry(const GrassmannPoint& X) {
  int n = half(X);
  const Plucker& P = X.plucker();
  bool plus = true, minus = true;
  for (std::size_t t = 0; t < P.sets.size(); ++t) {
    Rational other = P[index_involution(P.sets[t], n)];
    if (P.val[t] != other) plus = false;
    if (P.val[t] != -other) minus = false;
  }
  if (minus && !plus && is_tnn(X)) throw std::logic_error("a TNN point with Δ_I = -Δ_T(I) for all I");
  return plus;
}

bool is_in_lgrnn(const GrassmannPoint& X) {
  half(X);
  if (!is_tnn(X)) return false;
  bool iso = is_isotropic(X);
  if (iso != has_plucker_symmetry(X)) throw std::logic_error("isotropy and Plücker symmetry disagree on a TNN point");
  return iso;
}

GrassmannPoint rot_point(const GrassmannPoint& X) {
  int n = half_m(X);
  const Matrix& M = X.matrix();
  Matrix Y(M.rows(), M.cols());
  Rational s = n % 2 == 1 ? 1 : -1;
  for (std::size_t r = 0; r < M.rows(); ++r)
    for (int j = 0; j < n; ++j) {
      Y(r, z(j)) = s * M(r, z(n + j));
      Y(r, z(n + j)) = M(r, z(j));
    }
  return GrassmannPoint(Y);
}

GrassmannPoint alt_point(const GrassmannPoint& X) {
  Matrix Y = X.matrix();
  for (std::size_t r = 0; r < Y.rows(); ++r)
    for (std::size_t c = 0; c < Y.cols(); c += 2) Y(r, c) = -Y(r, c);
  return GrassmannPoint(Y);
}

GrassmannPoint perp_point(const GrassmannPoint& X) { return GrassmannPoint(kernel(X.matrix())); }

GrassmannPoint swap_point(const GrassmannPoint& X) { return alt_point(perp_point(X)); }

GrassmannPoint big_t_point(const GrassmannPoint& X) { return rot_point(swap_point(X)); }

bool is_rho_symmetric_point(const GrassmannPoint& X) {
  half(X);
  return big_t_point(X) == X;
}

GrassmannPoint sigma(const Matrix& M) {
  const int n = static_cast<int>(M.rows());
  if (M.cols() != M.rows()) throw Error(ErrorKind::ShapeMismatch, "sigma needs a square matrix");
  Matrix X(z(n), z(2 * n));
  for (int i = 1; i <= n; ++i) {
    X(z(i - 1), z(i - 1)) = 1;
    Rational s = (n - i) % 2 == 0 ? 1 : -1;
    for (int j = 1; j <= n; ++j) X(z(i - 1), z(n + j - 1)) = s * M(z(n - i), z(j - 1));
  }
  return GrassmannPoint(X);
}

Matrix sigma_inverse(const GrassmannPoint& X) {
  const int n = half(X);
  std::vector<int> first(z(n));
  std::iota(first.begin(), first.end(), 0);
  if (sgn(determinant(X.matrix().columns(first))) == 0) throw Error(ErrorKind::FirstMinorZero, "Δ_[n] vanishes");
  Matrix A = rref(X.matrix());
  Matrix M(z(n), z(n));
  for (int i = 1; i <= n; ++i) {
    Rational s = (n - i) % 2 == 0 ? 1 : -1;
    for (int j = 1; j <= n; ++j) M(z(n - i), z(j - 1)) = s * A(z(i - 1), z(n + j - 1));
  }
  return M;
}

bool is_antidiagonal_symmetric(const Matrix& M) {
  const std::size_t n = M.rows();
  if (M.cols() != n) return false;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (M(i, n - 1 - j) != M(j, n - 1 - i)) return false;
  return true;
}

bool matrix_is_tnn(const Matrix& M) {
  const int r = static_cast<int>(M.rows()), c = static_cast<int>(M.cols());
  if (r > 6 || c > 6) throw Error(ErrorKind::SizeGuard, "minor enumeration is limited to 6x6");
  for (int s = 1; s <= std::min(r, c); ++s)
    for (const auto& rows : subsets(r, s))
      for (const auto& cols : subsets(c, s)) {
        Matrix sub(z(s), z(s));
        for (int a = 0; a < s; ++a)
          for (int b = 0; b < s; ++b) sub(z(a), z(b)) = M(z(rows[z(a)] - 1), z(cols[z(b)] - 1));
        if (sgn(determinant(sub)) < 0) return false;
      }
  return true;
}

Matrix shift_matrix(int n) {
  const int m = 2 * n;
  Matrix S(z(m), z(m));
  for (int j = 1; j < m; ++j) S(z(j), z(j - 1)) = 1;
  S(0, z(m - 1)) = n % 2 == 1 ? 1 : -1;
  return S;
}

bool cyclic_shift_identity(int n) {
  if (n < 1) throw Error(ErrorKind::IndexOutOfRange, "n must be positive");
  Matrix S = shift_matrix(n);
  Matrix A = S + S.transpose();
  Matrix R = form_matrix(n);
  return A * R == -(R * A);
}

namespace {

struct Interval {
  Rational lo, hi;
};

Rational floor_to(const Rational& q, int bits) {
  mpz_class scaled = q.get_num() << bits, f;
  mpz_fdiv_q(f.get_mpz_t(), scaled.get_mpz_t(), q.get_den().get_mpz_t());
  Rational out(f, mpz_class(1) << bits);
  out.canonicalize();
  return out;
}

Rational ceil_to(const Rational& q, int bits) {
  mpz_class scaled = q.get_num() << bits, c;
  mpz_cdiv_q(c.get_mpz_t(), scaled.get_mpz_t(), q.get_den().get_mpz_t());
  Rational out(c, mpz_class(1) << bits);
  out.canonicalize();
  return out;
}

Interval operator+(const Interval& a, const Interval& b) { return {a.lo + b.lo, a.hi + b.hi}; }

Interval operator*(const Interval& a, const Interval& b) {
  Rational p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  return {*std::min_element(p, p + 4), *std::max_element(p, p + 4)};
}

Interval neg(const Interval& a) { return {-a.hi, -a.lo}; }

Interval rounded(const Interval& a, int bits) { return {floor_to(a.lo, bits), ceil_to(a.hi, bits)}; }

// Leibniz expansion; n is at most a handful here.
Interval interval_det(const std::vector<std::vector<Interval>>& A, int bits) {
  const std::size_t n = A.size();
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  Interval sum{0, 0};
  do {
    int inv = 0;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        if (p[a] > p[b]) ++inv;
    Interval term{1, 1};
    for (std::size_t r = 0; r < n; ++r) term = rounded(term * A[r][p[r]], bits + 8);
    sum = sum + (inv % 2 == 0 ? term : neg(term));
  } while (std::next_permutation(p.begin(), p.end()));
  return sum;
}

}  // namespace

FlowCheck positivity_flow(const GrassmannPoint& X, const Rational& t) {
  const int n = half(X);
  if (sgn(t) < 0) throw Error(ErrorKind::BoundViolation, "flow time must be nonnegative");
  if (sgn(t) == 0) {
    bool in = is_in_lgrnn(X);
    bool strict = std::all_of(X.plucker().val.begin(), X.plucker().val.end(), [](const Rational& q) { return sgn(q) > 0; });
    return {strict, in, 0};
  }
  const int m = 2 * n;
  const Matrix A = (shift_matrix(n) + shift_matrix(n).transpose()).scaled(t);
  // |entries of A^j| <= (2t)^j, so the tail past N is at most (2t)^(N+1)/(N+1)! * (N+2)/(N+2-2t).
  const Rational a = 2 * abs(t);
  for (int bits = 64; bits <= 4096; bits *= 2) {
    const Rational target(mpz_class(1), mpz_class(1) << bits);
    Matrix Y = X.matrix(), term = X.matrix();
    Rational tail = a;  // a^(N+1)/(N+1)! for the current N
    int N = 0;
    for (;;) {
      Rational bound = tail;
      if (a < N + 2) bound *= Rational(N + 2) / (N + 2 - a);
      if (a < N + 2 && bound < target) break;
      ++N;
      term = (term * A).scaled(Rational(1, N));
      Y = Y + term;
      tail *= a / (N + 1);
    }
    Rational bound = tail * Rational(N + 2) / (N + 2 - a);
    std::vector<std::vector<Interval>> E(z(n), std::vector<Interval>(z(m)));
    for (int r = 0; r < n; ++r) {
      Rational row_norm = 0;
      for (int s = 0; s < m; ++s) row_norm += abs(X.matrix()(z(r), z(s)));
      Rational rad = row_norm * bound;
      for (int s = 0; s < m; ++s) {
        const Rational& c = Y(z(r), z(s));
        E[z(r)][z(s)] = rounded({c - rad, c + rad}, bits);
      }
    }
    const auto sets = subsets(m, n);
    std::vector<Interval> delta;
    for (const auto& I : sets) {
      std::vector<std::vector<Interval>> sub(z(n), std::vector<Interval>(z(n)));
      for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) sub[z(r)][z(c)] = E[z(r)][z(I[z(c)] - 1)];
      delta.push_back(interval_det(sub, bits));
    }
    bool all_pos = true, all_neg = true, undecided = false;
    for (const auto& d : delta) {
      if (!(sgn(d.lo) > 0)) all_pos = false;
      if (!(sgn(d.hi) < 0)) all_neg = false;
      if (sgn(d.lo) <= 0 && sgn(d.hi) >= 0) undecided = true;
    }
    bool symmetric = true;
    for (std::size_t i = 0; i < sets.size(); ++i) {
      auto j = std::lower_bound(sets.begin(), sets.end(), index_involution(sets[i], n)) - sets.begin();
      const Interval &p = delta[i], &q = delta[z(static_cast<int>(j))];
      if (p.hi < q.lo || q.hi < p.lo) symmetric = false;
    }
    if (all_pos || all_neg) return {true, symmetric, bits};
    bool pos_seen = false, neg_seen = false;
    for (const auto& d : delta) {
      if (sgn(d.lo) > 0) pos_seen = true;
      if (sgn(d.hi) < 0) neg_seen = true;
    }
    if (pos_seen && neg_seen) return {false, symmetric, bits};
    if (!undecided) return {false, symmetric, bits};
  }
  throw Error(ErrorKind::PrecisionExhausted, "could not certify Plücker signs at 4096 bits");
}

bool positivity_flow_check(const GrassmannPoint& X, const Rational& t) { return positivity_flow(X, t).ok(); }

}  // namespace tnnlag
