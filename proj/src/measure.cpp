#include "tnnlag/measure.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "tnnlag/error.hpp"

namespace tnnlag {

namespace {

std::size_t z(int i) { return static_cast<std::size_t>(i); }

int wrap(int i, int m) { return ((i - 1) % m + m) % m + 1; }

Matrix from_generic(const std::vector<std::vector<Rational>>& rows, std::size_t cols) {
  Matrix M(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols; ++c) M(r, c) = rows[r][c];
  return M;
}

}  // namespace

Rational Plucker::operator[](const IndexSet& I) const {
  if (static_cast<int>(I.size()) != k) return 0;
  auto it = std::lower_bound(sets.begin(), sets.end(), I);
  if (it == sets.end() || *it != I) return 0;
  return val[z(static_cast<int>(it - sets.begin()))];
}

bool Plucker::nonnegative() const {
  return std::all_of(val.begin(), val.end(), [](const Rational& q) { return sgn(q) >= 0; });
}

Plucker normalized(Plucker p) {
  for (const auto& v : p.val)
    if (sgn(v) != 0) {
      Rational s = v;
      for (auto& w : p.val) w /= s;
      break;
    }
  return p;
}

Plucker raw_plucker(const Matrix& M) {
  Plucker p;
  p.k = static_cast<int>(M.rows());
  p.m = static_cast<int>(M.cols());
  p.sets = subsets(p.m, p.k);
  for (const auto& I : p.sets) {
    std::vector<int> idx;
    for (int c : I) idx.push_back(c - 1);
    p.val.push_back(p.k == 0 ? Rational(1) : determinant(M.columns(idx)));
  }
  return p;
}

Plucker plucker_of_matrix(const Matrix& M) {
  if (rank(M) != M.rows()) throw Error(ErrorKind::RankDeficient, "matrix does not have full row rank");
  return normalized(raw_plucker(M));
}

GrassmannPoint::GrassmannPoint(Matrix M) : M_(std::move(M)), P_(plucker_of_matrix(M_)) {}

GrassmannPoint point_from_plucker(const Plucker& p) {
  std::size_t first = 0;
  while (first < p.val.size() && sgn(p.val[first]) == 0) ++first;
  if (first == p.val.size()) throw Error(ErrorKind::RankDeficient, "all Plücker coordinates vanish");
  const IndexSet& I0 = p.sets[first];
  const Rational& d0 = p.val[first];
  Matrix M(z(p.k), z(p.m));
  for (int r = 0; r < p.k; ++r)
    for (int j = 1; j <= p.m; ++j) {
      IndexSet J = I0;
      J[z(r)] = j;
      if (std::count(J.begin(), J.end(), j) > 1) continue;
      // sort J and track the sign of the sorting permutation
      int s = 1;
      for (std::size_t a = 0; a < J.size(); ++a)
        for (std::size_t b = a + 1; b < J.size(); ++b)
          if (J[a] > J[b]) s = -s;
      std::sort(J.begin(), J.end());
      M(z(r), z(j - 1)) = p[J] / d0 * s;
    }
  GrassmannPoint X(M);
  if (!(X.plucker() == normalized(p)))
    throw Error(ErrorKind::ShapeMismatch, "coordinates violate the Plücker relations");
  return X;
}

IndexSet mu(const IndexSet& I, int i, int m) {
  int a = wrap(i, m), b = wrap(i + 1, m);
  bool ha = std::binary_search(I.begin(), I.end(), a), hb = std::binary_search(I.begin(), I.end(), b);
  if (ha || !hb) return {};
  IndexSet J = I;
  *std::find(J.begin(), J.end(), b) = a;
  std::sort(J.begin(), J.end());
  return J;
}

IndexSet nu(const IndexSet& I, int i, int m) {
  int a = wrap(i, m), b = wrap(i + 1, m);
  bool ha = std::binary_search(I.begin(), I.end(), a), hb = std::binary_search(I.begin(), I.end(), b);
  if (!ha || hb) return {};
  IndexSet J = I;
  *std::find(J.begin(), J.end(), a) = b;
  std::sort(J.begin(), J.end());
  return J;
}

Matrix x_matrix(int m, int k, int i, const Rational& a) {
  if (i < 1 || i > m) throw Error(ErrorKind::IndexOutOfRange, "x_i with i = " + std::to_string(i));
  Matrix E = Matrix::identity(z(m));
  if (i < m) E(z(i - 1), z(i)) = a;
  else E(z(m - 1), 0) = (k % 2 == 1 ? a : Rational(-a));
  return E;
}

Matrix y_matrix(int m, int k, int i, const Rational& b) {
  if (i < 1 || i > m) throw Error(ErrorKind::IndexOutOfRange, "y_i with i = " + std::to_string(i));
  Matrix E = Matrix::identity(z(m));
  if (i < m) E(z(i), z(i - 1)) = b;
  else E(0, z(m - 1)) = (k % 2 == 1 ? b : Rational(-b));
  return E;
}

GrassmannPoint add_bridge_point(const GrassmannPoint& X, int i, const Rational& a, Color at_i) {
  const Matrix E = at_i == Color::black ? y_matrix(X.m(), X.k(), i, a) : x_matrix(X.m(), X.k(), i, a);
  return GrassmannPoint(X.matrix() * E);
}

GrassmannPoint add_sym_bridge_point(const GrassmannPoint& X, int i, const Rational& a) {
  const int m = X.m();
  if (m % 2 != 0 || 2 * X.k() != m) throw Error(ErrorKind::ShapeMismatch, "symmetric bridges need a point of Gr(n, 2n)");
  const int n = m / 2;
  return GrassmannPoint(X.matrix() * x_matrix(m, X.k(), i, a) * y_matrix(m, X.k(), wrap(i + n, m), a));
}

GrassmannPoint add_lollipop_point(const GrassmannPoint& X, int i, Color c) {
  const int m = X.m() + 1, k = X.k();
  if (i < 1 || i > m) throw Error(ErrorKind::IndexOutOfRange, "lollipop at " + std::to_string(i));
  auto col = [&](int old) { return old < i ? old : old + 1; };  // 1-based
  if (c == Color::black) {
    Matrix M(z(k), z(m));
    for (int r = 0; r < k; ++r)
      for (int j = 1; j < m; ++j) M(z(r), z(col(j) - 1)) = X.matrix()(z(r), z(j - 1));
    return GrassmannPoint(M);
  }
  Matrix M(z(k + 1), z(m));
  M(0, z(i - 1)) = 1;
  for (int r = 0; r < k; ++r)
    for (int j = 1; j < m; ++j) {
      const Rational& v = X.matrix()(z(r), z(j - 1));
      M(z(r + 1), z(col(j) - 1)) = col(j) < i ? Rational(-v) : v;
    }
  return GrassmannPoint(M);
}

GrassmannPoint add_sym_lollipop_point(const GrassmannPoint& X, int i) {
  if (X.m() % 2 != 0) throw Error(ErrorKind::OddBoundary, "symmetric lollipop needs even m");
  const int m = X.m() + 2, n = m / 2;
  if (i < 1 || i > m) throw Error(ErrorKind::IndexOutOfRange, "symmetric lollipop at " + std::to_string(i));
  const int w = i <= n ? i + n : i - n;
  const int lo = std::min(i, w), hi = std::max(i, w);
  GrassmannPoint Y = add_lollipop_point(X, lo, lo == i ? Color::black : Color::white);
  return add_lollipop_point(Y, hi, hi == i ? Color::black : Color::white);
}

GrassmannPoint coordinate_point(int m, const IndexSet& white) {
  Matrix M(white.size(), z(m));
  for (std::size_t r = 0; r < white.size(); ++r) M(r, z(white[r] - 1)) = 1;
  return GrassmannPoint(M);
}

AffinePerm f_of_point(const GrassmannPoint& X) {
  const int m = X.m(), k = X.k();
  const Matrix& M = X.matrix();
  auto column = [&](int j) {
    std::vector<Rational> c(z(k));
    int r = wrap(j, m) - 1;
    for (int t = 0; t < k; ++t) c[z(t)] = M(z(t), z(r));
    return c;
  };
  std::vector<int> w(z(m));
  for (int i = 1; i <= m; ++i) {
    auto xi = column(i);
    if (std::all_of(xi.begin(), xi.end(), [](const Rational& q) { return sgn(q) == 0; })) {
      w[z(i - 1)] = i;
      continue;
    }
    std::vector<std::vector<Rational>> span;  // rows = vectors
    int j = i;
    for (;;) {
      ++j;
      span.push_back(column(j));
      auto with = span;
      with.push_back(xi);
      if (generic_rank(with) == generic_rank(span)) break;
    }
    w[z(i - 1)] = j;
  }
  return AffinePerm(m, w);
}

namespace {

struct MatchingSum {
  const PlabicNetwork& N;
  std::vector<int> interior;
  std::vector<char> matched;
  std::map<IndexSet, Rational> sums;
  std::vector<Color> leg_color;  // per boundary label

  explicit MatchingSum(const PlabicNetwork& net) : N(net) {
    const PlabicGraph& G = N.graph;
    matched.assign(z(G.vertex_slots()), 0);
    for (int v = 0; v < G.vertex_slots(); ++v)
      if (G.vertex_alive(v) && !G.is_boundary(v)) interior.push_back(v);
    for (int i = 1; i <= G.m(); ++i) {
      int h = G.leg(i);
      if (h < 0) {
        leg_color.push_back(Color::boundary);
        continue;
      }
      int u = G.target(h);
      leg_color.push_back(G.color(u));
    }
  }

  void record(const Rational& w) {
    const PlabicGraph& G = N.graph;
    IndexSet I;
    for (int i = 1; i <= G.m(); ++i) {
      bool on = matched[z(G.boundary_vertex(i))];
      Color c = leg_color[z(i - 1)];
      if ((c == Color::white && on) || (c == Color::black && !on)) I.push_back(i);
    }
    sums[I] += w;
  }

  void run(std::size_t from, const Rational& w) {
    const PlabicGraph& G = N.graph;
    while (from < interior.size() && matched[z(interior[from])]) ++from;
    if (from == interior.size()) {
      record(w);
      return;
    }
    int v = interior[from];
    matched[z(v)] = 1;
    for (int h : G.rotation(v)) {
      int u = G.target(h);
      if (u == v || matched[z(u)]) continue;
      matched[z(u)] = 1;
      run(from + 1, w * N.weight[z(h / 2)]);
      matched[z(u)] = 0;
    }
    matched[z(v)] = 0;
  }
};

}  // namespace

Plucker measurement_plucker(const PlabicNetwork& N) {
  if (static_cast<int>(N.weight.size()) < N.graph.edge_slots())
    throw Error(ErrorKind::StepWeightMismatch, "network is missing edge weights");
  // A boundary-boundary edge measures like a path through one relay of either color.
  PlabicNetwork R = N;
  for (int i = 1; i <= R.graph.m(); ++i) {
    int h = R.graph.leg(i);
    if (h >= 0 && R.graph.is_boundary(R.graph.target(h)) && R.graph.label_of(R.graph.target(h)) > i) {
      R.graph.subdivide(h, Color::white);
      R.weight.push_back(Rational(1));
    }
  }
  MatchingSum S(R);
  S.run(0, Rational(1));
  if (S.sums.empty()) throw Error(ErrorKind::NoMatching, "graph has no almost perfect matching");
  const int k = static_cast<int>(S.sums.begin()->first.size());
  Plucker p;
  p.k = k;
  p.m = N.graph.m();
  p.sets = subsets(p.m, k);
  p.val.assign(p.sets.size(), Rational(0));
  for (const auto& [I, w] : S.sums) {
    if (static_cast<int>(I.size()) != k) throw Error(ErrorKind::MalformedMap, "matchings disagree on k");
    auto it = std::lower_bound(p.sets.begin(), p.sets.end(), I);
    p.val[z(static_cast<int>(it - p.sets.begin()))] = w;
  }
  return p;
}

GrassmannPoint boundary_measurement(const PlabicNetwork& N) { return point_from_plucker(measurement_plucker(N)); }

GrassmannPoint point_from_steps(const std::vector<ConstructionStep>& steps, const std::vector<Rational>& weights) {
  if (steps.empty() || steps.front().kind != ConstructionStep::base)
    throw Error(ErrorKind::StepWeightMismatch, "step list must start with a base step");
  if (static_cast<int>(weights.size()) != bridge_step_count(steps))
    throw Error(ErrorKind::StepWeightMismatch, "need one weight per symmetric bridge");
  const AffinePerm& f0 = steps.front().perm;
  IndexSet white;
  for (int i = 1; i <= f0.m(); ++i)
    if (f0(i) == i + f0.m()) white.push_back(i);
  GrassmannPoint X = coordinate_point(f0.m(), white);
  std::size_t wi = 0;
  for (std::size_t s = 1; s < steps.size(); ++s) {
    const auto& st = steps[s];
    if (st.kind == ConstructionStep::sym_lollipop) X = add_sym_lollipop_point(X, st.i);
    else if (st.kind == ConstructionStep::sym_bridge) X = add_sym_bridge_point(X, st.i, weights[wi++]);
    else throw Error(ErrorKind::StepWeightMismatch, "base step after the start");
  }
  return X;
}

GrassmannPoint point_from_decomposition(const BridgeDecomposition& d, const std::vector<Rational>& weights) {
  GrassmannPoint X{Matrix(0, z(d.m0))};
  std::size_t wi = 0;
  for (const auto& s : d.steps) {
    if (s.kind == BridgeDecomposition::Step::lollipop) {
      X = add_lollipop_point(X, s.i, s.color);
    } else {
      if (wi >= weights.size()) throw Error(ErrorKind::StepWeightMismatch, "too few bridge weights");
      X = add_bridge_point(X, s.i, weights[wi++], s.color);
    }
  }
  if (wi != weights.size()) throw Error(ErrorKind::StepWeightMismatch, "too many bridge weights");
  return X;
}

BridgeRemoval remove_bridge(const GrassmannPoint& Y, int i, const AffinePerm& f) {
  AffinePerm g = right_mul_s(f, i);
  if (!g.is_bounded() || dim(g) != dim(f) + 1)
    throw Error(ErrorKind::NotInCell, "f * s_i does not cover " + f.str());
  const int m = Y.m();
  IndexSet J = imin(g, wrap(i + 1, m));
  Rational dj = Y.plucker()[J], dm = Y.plucker()[mu(J, i, m)];
  if (sgn(dj) == 0) throw Error(ErrorKind::NotInCell, "Δ_J vanishes on the input point");
  if (sgn(dm) == 0) throw Error(ErrorKind::NoPositiveRoot, "Δ_{μJ} vanishes on the input point");
  Rational c = dj / dm;
  if (sgn(c) <= 0) throw Error(ErrorKind::NoPositiveRoot, "nonpositive bridge weight");
  return {c, add_bridge_point(Y, i, -c)};
}

std::vector<Rational> removal_polynomial(const GrassmannPoint& Y, int i, const AffinePerm& f) {
  const int m = Y.m(), n = m / 2;
  AffinePerm g = beta(f, i);
  if (g == f) throw Error(ErrorKind::NotInCell, "β_" + std::to_string(i) + " does not raise " + f.str());
  IndexSet J = imin(g, wrap(i + 1, m));
  const Plucker& P = Y.plucker();
  IndexSet muJ = mu(J, i, m), nuJ = nu(J, i + n, m);
  IndexSet both = nuJ.empty() ? IndexSet{} : mu(nuJ, i, m);
  return {P[J], -(P[muJ] + P[nuJ]), P[both]};
}

SymBridgeRemoval remove_sym_bridge(const GrassmannPoint& Y, int i, const AffinePerm& f) {
  const int m = Y.m(), n = m / 2;
  if (m % 2 != 0 || 2 * Y.k() != m) throw Error(ErrorKind::ShapeMismatch, "need a point of Gr(n, 2n)");
  auto co = removal_polynomial(Y, i, f);
  const Rational &C = co[0], &B = co[1], &A = co[2];
  if (sgn(C) == 0) throw Error(ErrorKind::NotInCell, "Δ_J vanishes on the input point");
  QuadraticNumber c;
  bool rational = true;
  if (sgn(A) == 0) {
    if (sgn(B) >= 0) throw Error(ErrorKind::NoPositiveRoot, "linear P has no positive root");
    c = QuadraticNumber(Rational(-C / B));
  } else {
    Rational disc = B * B - 4 * A * C;
    if (sgn(disc) < 0) throw Error(ErrorKind::NoPositiveRoot, "P has no real root");
    Rational root;
    std::vector<QuadraticNumber> roots;
    if (rational_sqrt(disc, root)) {
      roots = {QuadraticNumber(Rational((-B - root) / (2 * A))), QuadraticNumber(Rational((-B + root) / (2 * A)))};
    } else {
      rational = false;
      Rational h = -B / (2 * A), s = 1 / (2 * A);
      roots = {QuadraticNumber(h, -s, disc), QuadraticNumber(h, s, disc)};
    }
    std::sort(roots.begin(), roots.end());
    auto it = std::find_if(roots.begin(), roots.end(), [](const QuadraticNumber& r) { return r.sign() > 0; });
    if (it == roots.end()) throw Error(ErrorKind::NoPositiveRoot, "P has no positive root");
    c = *it;
  }
  SymBridgeRemoval out{c, rational, {}, {}, AffinePerm()};
  // β_i(Y, -c) = Y x_i(-c) y_{i+n}(-c), evaluated entrywise in Q(√d).
  const int k = Y.k();
  std::vector<std::vector<QuadraticNumber>> M(z(k), std::vector<QuadraticNumber>(z(m)));
  for (int r = 0; r < k; ++r)
    for (int j = 0; j < m; ++j) M[z(r)][z(j)] = QuadraticNumber(Y.matrix()(z(r), z(j)));
  const QuadraticNumber neg = -c;
  auto add_col = [&](int dst, int src, const QuadraticNumber& t) {
    for (int r = 0; r < k; ++r) M[z(r)][z(dst - 1)] = M[z(r)][z(dst - 1)] + t * M[z(r)][z(src - 1)];
  };
  const QuadraticNumber wrap_sign = QuadraticNumber(Rational(k % 2 == 1 ? 1 : -1));
  if (i < m) add_col(i + 1, i, neg);
  else add_col(1, m, wrap_sign * neg);
  int i2 = wrap(i + n, m);
  if (i2 < m) add_col(i2, i2 + 1, neg);
  else add_col(m, 1, wrap_sign * neg);
  out.matrix = M;
  // f of the result by exact rank tests in Q(√d)
  std::vector<int> w(z(m));
  auto column = [&](int j) {
    std::vector<QuadraticNumber> col(z(k));
    for (int t = 0; t < k; ++t) col[z(t)] = M[z(t)][z(wrap(j, m) - 1)];
    return col;
  };
  for (int a = 1; a <= m; ++a) {
    auto xa = column(a);
    if (std::all_of(xa.begin(), xa.end(), [](const QuadraticNumber& q) { return q.is_zero(); })) {
      w[z(a - 1)] = a;
      continue;
    }
    std::vector<std::vector<QuadraticNumber>> span;
    int j = a;
    for (;;) {
      ++j;
      span.push_back(column(j));
      auto with = span;
      with.push_back(xa);
      if (generic_rank(with) == generic_rank(span)) break;
    }
    w[z(a - 1)] = j;
  }
  out.f_of_result = AffinePerm(m, w);
  if (rational) {
    std::vector<std::vector<Rational>> R(z(k), std::vector<Rational>(z(m)));
    for (int r = 0; r < k; ++r)
      for (int j = 0; j < m; ++j) R[z(r)][z(j)] = M[z(r)][z(j)].a();
    out.X = GrassmannPoint(from_generic(R, z(m)));
  }
  return out;
}

std::vector<Rational> random_weights(std::uint64_t seed, int count) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(1, 9), den(1, 4);
  std::vector<Rational> w;
  for (int t = 0; t < count; ++t) {
    Rational q(num(rng), den(rng));
    q.canonicalize();
    w.push_back(q);
  }
  return w;
}

GrassmannPoint random_point(const AffinePerm& f, std::uint64_t seed) {
  BridgeDecomposition d = bridge_decomposition(f);
  int bridges = static_cast<int>(std::count_if(d.steps.begin(), d.steps.end(), [](const BridgeDecomposition::Step& s) {
    return s.kind == BridgeDecomposition::Step::bridge;
  }));
  return point_from_decomposition(d, random_weights(seed, bridges));
}

GrassmannPoint random_sym_point(const AffinePerm& f, std::uint64_t seed) {
  Construction C = bridge_construction(f);
  return point_from_steps(C.steps, random_weights(seed, bridge_step_count(C.steps)));
}

nlohmann::json to_json(const GrassmannPoint& X) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t r = 0; r < X.matrix().rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t c = 0; c < X.matrix().cols(); ++c) row.push_back(to_string(X.matrix()(r, c)));
    rows.push_back(row);
  }
  return {{"k", X.k()}, {"m", X.m()}, {"rows", rows}};
}

GrassmannPoint point_from_json(const nlohmann::json& j) {
  try {
    int k = j.at("k").get<int>(), m = j.at("m").get<int>();
    const auto& rows = j.at("rows");
    if (static_cast<int>(rows.size()) != k) throw Error(ErrorKind::ParseError, "row count differs from k");
    Matrix M(z(k), z(m));
    for (int r = 0; r < k; ++r) {
      if (static_cast<int>(rows[z(r)].size()) != m) throw Error(ErrorKind::ParseError, "row length differs from m");
      for (int c = 0; c < m; ++c) {
        const auto& e = rows[z(r)][z(c)];
        M(z(r), z(c)) = e.is_string() ? parse_rational(e.get<std::string>()) : Rational(e.get<long>());
      }
    }
    return GrassmannPoint(M);
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorKind::ParseError, ex.what());
  }
}

nlohmann::json to_json(const Plucker& p) {
  nlohmann::json coords = nlohmann::json::array();
  for (std::size_t t = 0; t < p.sets.size(); ++t) coords.push_back({{"I", p.sets[t]}, {"value", to_string(p.val[t])}});
  return {{"k", p.k}, {"m", p.m}, {"coordinates", coords}};
}

}  // namespace tnnlag
