#include <algorithm>

#include "tnnlag/error.hpp"
#include "tnnlag/plabic.hpp"

namespace tnnlag {

namespace {

std::size_t z(int i) { return static_cast<std::size_t>(i); }

int wrap(int i, int m) { return ((i - 1) % m + m) % m + 1; }

bool all_fixed(const AffinePerm& f) {
  for (int i = 1; i <= f.m(); ++i)
    if (f(i) != i && f(i) != i + f.m()) return false;
  return true;
}

// Attaches a relay on the edge of h (leaving p) when its far end has p's color.
void relay_if_needed(PlabicGraph& H, int h) {
  int p = H.origin(h), u = H.target(h);
  if (!H.is_boundary(u) && H.color(u) == H.color(p)) H.subdivide(h, opposite(H.color(p)));
}

bool two_lollipops(const PlabicGraph& G) {
  if (G.m() != 2 || G.num_vertices() != 4) return false;
  for (int i = 1; i <= 2; ++i) {
    int h = G.leg(i);
    if (h < 0 || G.is_boundary(G.target(h)) || G.degree(G.target(h)) != 1) return false;
  }
  return true;
}

}  // namespace

PlabicGraph lollipop_graph(const AffinePerm& f) {
  int m = f.m();
  PlabicGraph G(m);
  for (int i = 1; i <= m; ++i) {
    Color c;
    if (f(i) == i) c = Color::black;
    else if (f(i) == i + m) c = Color::white;
    else throw Error(ErrorKind::ShapeMismatch, f.str() + " is not a lollipop permutation");
    int v = G.add_vertex(c);
    G.add_edge(G.boundary_vertex(i), v);
  }
  return G;
}

BridgeResult add_bridge(const PlabicGraph& G, int i, Color at_i) {
  int m = G.m();
  if (m < 2 || i < 1 || i > m) throw Error(ErrorKind::IndexOutOfRange, "bridge at " + std::to_string(i));
  if (at_i == Color::boundary) throw Error(ErrorKind::IndexOutOfRange, "bridge endpoint must be black or white");
  int j = wrap(i + 1, m);
  PlabicGraph H = G;
  if (H.leg(i) < 0 || H.leg(j) < 0) throw Error(ErrorKind::IndexOutOfRange, "bridge endpoint has no edge");
  int hi = H.leg(i);
  int p = H.subdivide(hi, at_i);
  int pin = H.rotation(p)[1];
  relay_if_needed(H, pin);
  int hj = H.leg(j);
  int q = H.subdivide(hj, opposite(at_i));
  int qin = H.rotation(q)[1];
  relay_if_needed(H, qin);
  int e = H.add_edge(p, q);
  H.set_rotation(p, {PlabicGraph::twin(hi), 2 * e, pin});
  H.set_rotation(q, {PlabicGraph::twin(hj), qin, 2 * e + 1});
  return {std::move(H), e};
}

PlabicGraph add_lollipop(const PlabicGraph& G, int i, Color c) {
  if (c == Color::boundary) throw Error(ErrorKind::IndexOutOfRange, "lollipop must be black or white");
  PlabicGraph H = G;
  int b = H.insert_boundary_vertex(i);
  int v = H.add_vertex(c);
  H.add_edge(b, v);
  return H;
}

SymBridgeResult sym_bridge(const PlabicGraph& G, int i) {
  int m = G.m();
  if (m < 2 || m % 2 != 0 || i < 1 || i > m) throw Error(ErrorKind::IndexOutOfRange, "symmetric bridge at " + std::to_string(i));
  int n = m / 2;
  if (two_lollipops(G)) {
    PlabicGraph H(2);
    int w = H.add_vertex(Color::white), b = H.add_vertex(Color::black);
    H.add_edge(H.boundary_vertex(i), w);
    int e = H.add_edge(w, b);
    H.add_edge(b, H.boundary_vertex(wrap(i + 1, 2)));
    return {std::move(H), {e}, true};
  }
  auto r1 = add_bridge(G, i, Color::white);
  if (m > 2) {
    auto r2 = add_bridge(r1.graph, wrap(i + n, m), Color::black);
    return {std::move(r2.graph), {r1.edge, r2.edge}, false};
  }
  // m = 2: both bridges join the same two legs.  The second one goes outside the first on
  // leg i+1 and inside it on leg i, which keeps the map T-symmetric.
  PlabicGraph H = std::move(r1.graph);
  const int j = wrap(i + 1, 2);
  const int hj = H.leg(j);
  int q = H.subdivide(hj, Color::black);
  int qin = H.rotation(q)[1];
  relay_if_needed(H, qin);
  int a1 = H.target(H.leg(i));
  int h_in = H.rotation(a1)[2];
  int p = H.subdivide(h_in, Color::white);
  int pin = H.rotation(p)[1];
  relay_if_needed(H, pin);
  relay_if_needed(H, PlabicGraph::twin(h_in));
  int e = H.add_edge(q, p);
  H.set_rotation(q, {PlabicGraph::twin(hj), 2 * e, qin});
  H.set_rotation(p, {PlabicGraph::twin(h_in), pin, 2 * e + 1});
  return {std::move(H), {r1.edge, e}, false};
}

PlabicGraph sym_lollipop(const PlabicGraph& G, int i) {
  if (G.m() % 2 != 0) throw Error(ErrorKind::OddBoundary, "symmetric lollipop needs even m");
  int m = G.m() + 2, n = m / 2;
  if (i < 1 || i > m) throw Error(ErrorKind::IndexOutOfRange, "symmetric lollipop at " + std::to_string(i));
  int w = i <= n ? i + n : i - n;
  PlabicGraph H = G;
  H.insert_boundary_vertex(std::min(i, w));
  H.insert_boundary_vertex(std::max(i, w));
  int bi = H.add_vertex(Color::black);
  H.add_edge(H.boundary_vertex(i), bi);
  int ww = H.add_vertex(Color::white);
  H.add_edge(H.boundary_vertex(w), ww);
  return H;
}

PlabicGraph normalize(const PlabicGraph& G) {
  PlabicGraph H = G;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int v = 0; v < H.vertex_slots(); ++v) {
      if (!H.vertex_alive(v) || H.is_boundary(v) || H.degree(v) != 2) continue;
      int a = H.target(H.rotation(v)[0]), b = H.target(H.rotation(v)[1]);
      if (a == v || b == v) continue;
      if (a != b && !H.is_boundary(a) && !H.is_boundary(b) && H.color(a) == H.color(b)) {
        H.merge_through(v);
      } else if (a != b || H.is_boundary(a)) {
        H.splice_out(v);
      } else {
        continue;
      }
      changed = true;
    }
  }
  H.compact();
  return H;
}

int construction_descent(const AffinePerm& f) {
  const int s = symmdim(f);
  const bool want_middle = middle_count(f) > 0;
  int fallback = -1;
  for (int i : beta_descents(f)) {
    AffinePerm t = twist(f, i);
    if (!t.is_bounded() || !is_rho_symmetric(t) || beta(t, i) != f || symmdim(t) != s - 1) continue;
    if (!want_middle || middle_count(t) > 0) return i;
    if (fallback < 0) fallback = i;
  }
  if (fallback < 0) throw Error(ErrorKind::NotRhoSymmetric, "no symmetric descent for " + f.str());
  return fallback;
}

namespace {

void build(const AffinePerm& f, Construction& C) {
  const int m = f.m(), n = m / 2;
  if (all_fixed(f)) {
    C.graph = lollipop_graph(f);
    C.steps.push_back({ConstructionStep::base, 0, n, f});
    return;
  }
  for (int i = 1; i <= m; ++i)
    if (f(i) == i) {
      build(remove_fixed_pair(f, i), C);
      C.graph = sym_lollipop(C.graph, i);
      C.steps.push_back({ConstructionStep::sym_lollipop, i, n, f});
      return;
    }
  int i = construction_descent(f);
  build(twist(f, i), C);
  C.graph = sym_bridge(C.graph, i).graph;
  C.steps.push_back({ConstructionStep::sym_bridge, i, n, f});
}

}  // namespace

Construction bridge_construction(const AffinePerm& f) {
  if (f.m() % 2 != 0 || 2 * f.k() != f.m() || !is_rho_symmetric(f))
    throw Error(ErrorKind::NotRhoSymmetric, f.str() + " is not ρ-symmetric");
  Construction C;
  build(f, C);
  return C;
}

int bridge_step_count(const std::vector<ConstructionStep>& steps) {
  return static_cast<int>(std::count_if(steps.begin(), steps.end(),
                                        [](const ConstructionStep& s) { return s.kind == ConstructionStep::sym_bridge; }));
}

PlabicNetwork replay_network(const std::vector<ConstructionStep>& steps, const std::vector<Rational>& weights) {
  if (steps.empty() || steps.front().kind != ConstructionStep::base)
    throw Error(ErrorKind::StepWeightMismatch, "step list must start with a base step");
  if (static_cast<int>(weights.size()) != bridge_step_count(steps))
    throw Error(ErrorKind::StepWeightMismatch, "need one weight per symmetric bridge");
  PlabicNetwork N{lollipop_graph(steps.front().perm), {}};
  std::size_t wi = 0;
  for (std::size_t s = 1; s < steps.size(); ++s) {
    const auto& st = steps[s];
    if (st.kind == ConstructionStep::base) throw Error(ErrorKind::StepWeightMismatch, "base step after the start");
    if (st.kind == ConstructionStep::sym_lollipop) {
      N.graph = sym_lollipop(N.graph, st.i);
      continue;
    }
    const Rational& a = weights[wi++];
    if (sgn(a) <= 0) throw Error(ErrorKind::StepWeightMismatch, "bridge weights must be positive");
    auto r = sym_bridge(N.graph, st.i);
    if (r.merged) N.weight.clear();
    N.graph = std::move(r.graph);
    N.weight.resize(z(N.graph.edge_slots()), Rational(1));
    for (int e : r.edges) N.weight[z(e)] = r.merged ? Rational(2 * a) : a;
  }
  N.weight.resize(z(N.graph.edge_slots()), Rational(1));
  return N;
}

PlabicGraph replay(const std::vector<ConstructionStep>& steps) {
  std::vector<Rational> w(z(bridge_step_count(steps)), Rational(1));
  return replay_network(steps, w).graph;
}

namespace {

// Drops the fixed point at position i of f in B(k, m), giving an element of B(k', m-1).
AffinePerm drop_fixed_point(const AffinePerm& f, int i) {
  const int m = f.m();
  auto psi = [&](int v) {
    int r = ((v - 1) % m + m) % m + 1;
    int q = (v - r) / m;
    return q * (m - 1) + (r < i ? r : r - 1);
  };
  std::vector<int> w;
  for (int j = 1; j <= m; ++j)
    if (j != i) w.push_back(psi(f(j)));
  return AffinePerm(m - 1, w);
}

}  // namespace

BridgeDecomposition bridge_decomposition(const AffinePerm& f0) {
  BridgeDecomposition d;
  std::vector<BridgeDecomposition::Step> rev;
  AffinePerm f = f0;
  while (f.m() > 0) {
    const int m = f.m();
    int fixed = 0;
    for (int i = 1; i <= m && !fixed; ++i)
      if (f(i) == i || f(i) == i + m) fixed = i;
    if (fixed) {
      rev.push_back({BridgeDecomposition::Step::lollipop, fixed, f(fixed) == fixed ? Color::black : Color::white});
      f = drop_fixed_point(f, fixed);
      continue;
    }
    int pick = 0;
    for (int i = 1; i <= m && !pick; ++i)
      if (f(i) < f(i + 1)) pick = i;
    if (!pick) throw Error(ErrorKind::BoundViolation, "no bridge position in " + f.str());
    rev.push_back({BridgeDecomposition::Step::bridge, pick, Color::white});
    f = right_mul_s(f, pick);
  }
  d.m0 = 0;
  d.steps.assign(rev.rbegin(), rev.rend());
  return d;
}

PlabicNetwork decomposition_network(const BridgeDecomposition& d, const std::vector<Rational>& weights) {
  PlabicNetwork N{PlabicGraph(d.m0), {}};
  std::size_t wi = 0;
  for (const auto& s : d.steps) {
    if (s.kind == BridgeDecomposition::Step::lollipop) {
      N.graph = add_lollipop(N.graph, s.i, s.color);
    } else {
      if (wi >= weights.size()) throw Error(ErrorKind::StepWeightMismatch, "too few bridge weights");
      auto r = add_bridge(N.graph, s.i, s.color);
      N.graph = std::move(r.graph);
      N.weight.resize(z(N.graph.edge_slots()), Rational(1));
      N.weight[z(r.edge)] = weights[wi++];
    }
  }
  if (wi != weights.size()) throw Error(ErrorKind::StepWeightMismatch, "too many bridge weights");
  N.weight.resize(z(N.graph.edge_slots()), Rational(1));
  return N;
}

int minimal_symmetric_faces(const AffinePerm& f) {
  int s = symmdim(f);
  return middle_count(f) > 0 ? 2 * s : 2 * s + 1;
}

bool is_reduced(const PlabicGraph& G, const AffinePerm& f) {
  if (f.m() != G.m() || !f.is_bounded()) throw Error(ErrorKind::UnknownCell, "permutation does not match the graph");
  return faces(G) == dim(f) + 1;
}

bool is_minimal_symmetric(const PlabicGraph& G, const AffinePerm& f) {
  if (f.m() != G.m() || f.m() % 2 != 0 || !is_rho_symmetric(f))
    throw Error(ErrorKind::UnknownCell, "permutation is not a ρ-symmetric cell of this graph");
  return is_rho_symmetric_graph(G) && faces(G) == minimal_symmetric_faces(f);
}

}  // namespace tnnlag
