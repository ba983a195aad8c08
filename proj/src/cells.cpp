#include "tnnlag/cells.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "tnnlag/error.hpp"

namespace tnnlag {

namespace {

std::size_t z(int i) { return static_cast<std::size_t>(i); }

}  // namespace

int CellPoset::index_of(const AffinePerm& f) const {
  auto it = std::find(nodes.begin(), nodes.end(), f);
  return it == nodes.end() ? -1 : static_cast<int>(it - nodes.begin());
}

std::vector<int> CellPoset::rank_counts() const {
  int top = ranks.empty() ? -1 : *std::max_element(ranks.begin(), ranks.end());
  std::vector<int> c(z(top + 1), 0);
  for (int r : ranks) ++c[z(r)];
  return c;
}

std::vector<int> CellPoset::lower_covers(int v) const {
  std::vector<int> out;
  for (auto [a, b] : hasse_edges)
    if (b == v) out.push_back(a);
  return out;
}

std::vector<int> CellPoset::upper_covers(int v) const {
  std::vector<int> out;
  for (auto [a, b] : hasse_edges)
    if (a == v) out.push_back(b);
  return out;
}

CellPoset build_poset(int n) {
  if (n < 0) throw Error(ErrorKind::IndexOutOfRange, "n must be nonnegative");
  if (n > 4) throw Error(ErrorKind::SizeGuard, "build_poset is limited to n <= 4");
  CellPoset P;
  P.n = n;
  P.nodes = enumerate(n, 2 * n, true);
  std::stable_sort(P.nodes.begin(), P.nodes.end(),
                   [](const AffinePerm& a, const AffinePerm& b) { return symmdim(a) < symmdim(b); });
  for (const auto& f : P.nodes) P.ranks.push_back(symmdim(f));
  const int N = static_cast<int>(P.nodes.size());
  std::vector<std::vector<char>> leq(z(N), std::vector<char>(z(N), 0));
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b) leq[z(a)][z(b)] = a == b || bruhat_leq(P.nodes[z(a)], P.nodes[z(b)]);

  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b) {
      if (a == b || !leq[z(a)][z(b)]) continue;
      if (P.ranks[z(a)] >= P.ranks[z(b)]) throw std::logic_error("symmdim is not strictly monotone on " + P.nodes[z(a)].str());
      if (P.ranks[z(b)] == P.ranks[z(a)] + 1) P.hasse_edges.push_back({a, b});
    }

  // The cover relation of the order itself must be the rank-filtration edges.
  std::set<std::pair<int, int>> by_rank(P.hasse_edges.begin(), P.hasse_edges.end());
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b) {
      if (a == b || !leq[z(a)][z(b)]) continue;
      bool cover = true;
      for (int c = 0; c < N && cover; ++c)
        if (c != a && c != b && leq[z(a)][z(c)] && leq[z(c)][z(b)]) cover = false;
      if (cover != (by_rank.count({a, b}) > 0))
        throw std::logic_error("poset is not graded at " + P.nodes[z(a)].str() + " < " + P.nodes[z(b)].str());
    }

  // Ambient covers between two symmetric elements are symmetric covers.
  for (int a = 0; a < N; ++a)
    for (const auto& g : covers(P.nodes[z(a)])) {
      int b = P.index_of(g);
      if (b >= 0 && !by_rank.count({a, b}))
        throw std::logic_error("ambient cover " + P.nodes[z(a)].str() + " < " + g.str() + " is missing");
    }
  return P;
}

std::vector<int> longest_chain_from_bottom(const CellPoset& P) {
  std::vector<int> order(P.nodes.size());
  for (std::size_t v = 0; v < order.size(); ++v) order[v] = static_cast<int>(v);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return P.ranks[z(a)] < P.ranks[z(b)]; });
  std::vector<int> len(P.nodes.size(), 0);
  for (int v : order)
    for (int u : P.lower_covers(v)) len[z(v)] = std::max(len[z(v)], len[z(u)] + 1);
  return len;
}

namespace {

struct Op {
  bool lollipop;
  int i;
};

struct Plan {
  AffinePerm base;
  std::vector<Op> ops;  // applied in order to a point of Π^R_base
};

std::optional<Plan> plan_path(const AffinePerm& f, const AffinePerm& g) {
  if (f == g) return Plan{f, {}};
  if (!bruhat_leq(f, g)) return std::nullopt;
  for (int i = 1; i <= g.m(); ++i)
    if (g(i) == i) {
      if (f(i) != i) return std::nullopt;
      auto inner = plan_path(remove_fixed_pair(f, i), remove_fixed_pair(g, i));
      if (!inner) return std::nullopt;
      inner->ops.push_back({true, i});
      return inner;
    }
  const int n = g.m() / 2;
  for (int i = 1; i <= g.m(); ++i) {
    for (const auto& t : enumerate(n, 2 * n, true)) {
      if (symmdim(t) + 1 != symmdim(g) || beta(t, i) != g || !bruhat_leq(f, t)) continue;
      auto inner = plan_path(f, t);
      if (!inner) continue;
      inner->ops.push_back({false, i});
      return inner;
    }
  }
  return std::nullopt;
}

GrassmannPoint realize(const Plan& p, const GrassmannPoint& base, const std::vector<Rational>& w, const Rational& eps) {
  GrassmannPoint X = base;
  std::size_t k = 0;
  for (const auto& op : p.ops) {
    if (op.lollipop) X = add_sym_lollipop_point(X, op.i);
    else X = add_sym_bridge_point(X, op.i, eps * w[k++]);
  }
  return X;
}

Rational distance(const Plucker& Y, const Plucker& X) {
  std::size_t first = 0;
  while (sgn(X.val[first]) == 0) ++first;
  Rational best = 0;
  if (sgn(Y.val[first]) == 0) throw std::logic_error("sequence point vanishes on the limit's first coordinate");
  for (std::size_t t = 0; t < X.val.size(); ++t) {
    Rational d = abs(Y.val[t] / Y.val[first] - X.val[t] / X.val[first]);
    if (d > best) best = d;
  }
  return best;
}

// Laurent polynomials in one variable eps, for limits along monomial curves.
struct Laurent {
  std::map<int, Rational> c;

  Laurent() = default;
  Laurent(const Rational& q, int e = 0) {
    if (sgn(q) != 0) c[e] = q;
  }
  bool zero() const { return c.empty(); }
  int order() const { return c.begin()->first; }
  Rational at(const Rational& eps) const {
    Rational v = 0;
    for (const auto& [e, q] : c) {
      Rational p = 1;
      for (int t = 0; t < std::abs(e); ++t) p *= eps;
      v += e >= 0 ? Rational(q * p) : Rational(q / p);
    }
    return v;
  }
  friend Laurent operator+(Laurent a, const Laurent& b) {
    for (const auto& [e, q] : b.c) {
      Rational& r = a.c[e];
      r += q;
      if (sgn(r) == 0) a.c.erase(e);
    }
    return a;
  }
  friend Laurent operator*(const Laurent& a, const Laurent& b) {
    Laurent out;
    for (const auto& [e1, q1] : a.c)
      for (const auto& [e2, q2] : b.c) out = out + Laurent(q1 * q2, e1 + e2);
    return out;
  }
  Laurent operator-() const {
    Laurent out = *this;
    for (auto& [e, q] : out.c) q = -q;
    return out;
  }
};

using LMatrix = std::vector<std::vector<Laurent>>;

int wrap_index(int i, int m) { return ((i - 1) % m + m) % m + 1; }

// Same column operations as point_from_steps, with bridge weights w_k eps^e_k.
LMatrix laurent_point(const std::vector<ConstructionStep>& steps, const std::vector<Rational>& w,
                      const std::vector<int>& e) {
  const AffinePerm& f0 = steps.front().perm;
  int m = f0.m();
  LMatrix M;
  for (int i = 1; i <= m; ++i)
    if (f0(i) == i + m) {
      std::vector<Laurent> row(z(m));
      row[z(i - 1)] = Laurent(1);
      M.push_back(row);
    }
  std::size_t k = 0;
  for (std::size_t s = 1; s < steps.size(); ++s) {
    const auto& st = steps[s];
    if (st.kind == ConstructionStep::sym_lollipop) {
      const int m2 = m + 2, n = m2 / 2;
      const int wpos = st.i <= n ? st.i + n : st.i - n;
      const int lo = std::min(st.i, wpos), hi = std::max(st.i, wpos);
      for (int pos : {lo, hi}) {
        const bool black = pos == st.i;
        for (auto& row : M) row.insert(row.begin() + (pos - 1), Laurent());
        ++m;
        if (!black) {
          for (auto& row : M)
            for (int c = 0; c < pos - 1; ++c) row[z(c)] = -row[z(c)];
          std::vector<Laurent> top(z(m));
          top[z(pos - 1)] = Laurent(1);
          M.insert(M.begin(), top);
        }
      }
    } else {
      const int n = m / 2, kk = static_cast<int>(M.size());
      const Laurent a(w[k], e[k]);
      ++k;
      const Laurent sa = kk % 2 == 1 ? a : -a;
      auto add_col = [&](int dst, int src, const Laurent& t) {
        for (auto& row : M) row[z(dst - 1)] = row[z(dst - 1)] + t * row[z(src - 1)];
      };
      if (st.i < m) add_col(st.i + 1, st.i, a);
      else add_col(1, m, sa);
      const int i2 = wrap_index(st.i + n, m);
      if (i2 < m) add_col(i2, i2 + 1, a);
      else add_col(m, 1, sa);
    }
  }
  return M;
}

std::vector<Laurent> laurent_plucker(const LMatrix& M, int m) {
  const int k = static_cast<int>(M.size());
  std::vector<Laurent> out;
  for (const auto& I : subsets(m, k)) {
    std::vector<int> p(z(k));
    std::iota(p.begin(), p.end(), 0);
    Laurent d;
    do {
      int inv = 0;
      for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b)
          if (p[z(a)] > p[z(b)]) ++inv;
      Laurent t(1);
      for (int r = 0; r < k && !t.zero(); ++r) t = t * M[z(r)][z(I[z(p[z(r)])] - 1)];
      d = d + (inv % 2 == 0 ? t : -t);
    } while (std::next_permutation(p.begin(), p.end()));
    out.push_back(d);
  }
  return out;
}

Plucker plucker_with(const std::vector<Rational>& val, int k, int m) {
  Plucker P;
  P.k = k;
  P.m = m;
  P.sets = subsets(m, k);
  P.val = val;
  return normalized(P);
}

// Searches monomial curves w_k eps^e_k, e_k in [-2, 2], whose limit lies in Π^R_f.
struct Curve {
  std::vector<ConstructionStep> steps;
  std::vector<Rational> w;
  std::vector<int> e;
};

std::optional<Curve> find_curve(const AffinePerm& f, const AffinePerm& g, std::uint64_t seed) {
  Construction C = bridge_construction(g);
  const int d = bridge_step_count(C.steps);
  const auto w = random_weights(seed, d);
  const int m = g.m(), k = g.k();
  std::vector<int> e(z(d), -2);
  for (;;) {
    auto L = laurent_plucker(laurent_point(C.steps, w, e), m);
    int lowest = 0;
    bool any = false;
    for (const auto& x : L)
      if (!x.zero() && (!any || x.order() < lowest)) {
        lowest = x.order();
        any = true;
      }
    std::vector<Rational> lead;
    for (const auto& x : L) lead.push_back(!x.zero() && x.order() == lowest ? x.c.begin()->second : Rational(0));
    if (f_of_point(point_from_plucker(plucker_with(lead, k, m))) == f) return Curve{C.steps, w, e};
    std::size_t t = 0;
    while (t < e.size() && e[t] == 2) e[t++] = -2;
    if (t == e.size()) return std::nullopt;
    ++e[t];
  }
}

}  // namespace

ClosureWitness find_closure_witness(const AffinePerm& f, const AffinePerm& g, int samples, std::uint64_t seed) {
  if (!is_rho_symmetric(f) || !is_rho_symmetric(g)) throw Error(ErrorKind::NotRhoSymmetric, "closure witness needs symmetric permutations");
  if (f.m() != g.m()) throw Error(ErrorKind::ShapeMismatch, "permutations of different periods");
  ClosureWitness W;
  if (!bruhat_leq(f, g)) {
    auto Mf = matroid_of(f), Mg = matroid_of(g);
    for (const auto& I : Mf)
      if (!std::binary_search(Mg.begin(), Mg.end(), I)) {
        W.separating = I;
        return W;
      }
    throw std::logic_error("matroid of " + f.str() + " lies inside that of the incomparable " + g.str());
  }
  W.comparable = true;
  auto plan = plan_path(f, g);
  if (!plan) {
    auto curve = find_curve(f, g, seed);
    if (!curve) throw std::logic_error("no degeneration found from " + g.str() + " to " + f.str());
    for (int x : curve->e) W.steps.push_back("eps^" + std::to_string(x));
    const int m = g.m(), k = g.k();
    auto L = laurent_plucker(laurent_point(curve->steps, curve->w, curve->e), m);
    int lowest = 0;
    bool any = false;
    for (const auto& x : L)
      if (!x.zero() && (!any || x.order() < lowest)) {
        lowest = x.order();
        any = true;
      }
    std::vector<Rational> lead;
    for (const auto& x : L) lead.push_back(!x.zero() && x.order() == lowest ? x.c.begin()->second : Rational(0));
    W.limit = plucker_with(lead, k, m);
    Rational eps = 1;
    for (int s = 0; s < samples; ++s) {
      eps /= 2;
      std::vector<Rational> v;
      for (const auto& x : L) v.push_back(x.at(eps));
      Plucker Y = plucker_with(v, k, m);
      if (f_of_point(point_from_plucker(Y)) != g) throw std::logic_error("sequence point left the cell of " + g.str());
      W.sequence.push_back(Y);
      W.distances.push_back(distance(Y, W.limit));
    }
    return W;
  }
  int bridges = 0;
  for (const auto& op : plan->ops) {
    W.steps.push_back(std::string(op.lollipop ? "lambda_" : "beta_") + std::to_string(op.i));
    if (!op.lollipop) ++bridges;
  }
  const GrassmannPoint base = random_sym_point(plan->base, seed);
  const auto w = random_weights(seed + 1, bridges);
  GrassmannPoint X = realize(*plan, base, w, Rational(0));
  if (f_of_point(X) != f) throw std::logic_error("limit point left the cell of " + f.str());
  W.limit = X.plucker();
  Rational eps = 1;
  for (int s = 0; s < samples; ++s) {
    eps /= 2;
    GrassmannPoint Y = realize(*plan, base, w, eps);
    if (f_of_point(Y) != g) throw std::logic_error("sequence point left the cell of " + g.str());
    W.sequence.push_back(Y.plucker());
    W.distances.push_back(distance(Y.plucker(), W.limit));
  }
  return W;
}

bool closure_witness(const AffinePerm& f, const AffinePerm& g, int samples) {
  ClosureWitness W = find_closure_witness(f, g, samples);
  if (!W.comparable) return false;
  if (f == g) return true;
  for (std::size_t s = W.distances.size() / 2 + 1; s < W.distances.size(); ++s)
    if (!(W.distances[s] < W.distances[s - 1])) return false;
  // Near the limit the distance shrinks roughly linearly in eps.
  if (W.distances.size() >= 2 && W.distances.back() > W.distances[W.distances.size() - 2] * Rational(3, 4)) return false;
  return true;
}

std::string poset_dot(const CellPoset& P) {
  std::ostringstream out;
  out << "digraph poset {\n  rankdir=BT;\n  node [shape=box, fontname=\"monospace\"];\n";
  auto counts = P.rank_counts();
  for (std::size_t r = 0; r < counts.size(); ++r) {
    out << "  { rank=same;";
    for (std::size_t v = 0; v < P.nodes.size(); ++v)
      if (P.ranks[v] == static_cast<int>(r)) out << " n" << v << ";";
    out << " }\n";
  }
  for (std::size_t v = 0; v < P.nodes.size(); ++v)
    out << "  n" << v << " [label=\"" << P.nodes[v].str() << "\\nsymmdim " << P.ranks[v] << "\"];\n";
  for (auto [a, b] : P.hasse_edges) out << "  n" << a << " -> n" << b << ";\n";
  out << "}\n";
  return out.str();
}

nlohmann::json to_json(const CellPoset& P) {
  nlohmann::json nodes = nlohmann::json::array(), edges = nlohmann::json::array();
  for (const auto& f : P.nodes) nodes.push_back(to_json(f));
  for (auto [a, b] : P.hasse_edges) edges.push_back({a, b});
  return {{"n", P.n}, {"nodes", nodes}, {"edges", edges}, {"ranks", P.ranks}};
}

}  // namespace tnnlag
