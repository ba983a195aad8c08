#include <algorithm>
#include <set>

#include "tnnlag/error.hpp"
#include "tnnlag/plabic.hpp"

namespace tnnlag {

namespace {

std::size_t z(int i) { return static_cast<std::size_t>(i); }

[[noreturn]] void mismatch(const std::string& what) { throw Error(ErrorKind::SiteMismatch, what); }

bool interior(const PlabicGraph& G, int v) { return G.vertex_alive(v) && !G.is_boundary(v); }

std::vector<int> face_through(const PlabicGraph& G, int h) {
  for (auto& c : face_cycles(G))
    if (std::find(c.begin(), c.end(), h) != c.end()) return c;
  mismatch("half-edge is not on any face");
}

bool real_cycle(const PlabicGraph& G, const std::vector<int>& c) {
  return std::all_of(c.begin(), c.end(), [&](int h) { return h < 2 * G.edge_slots(); });
}

// Vertices of an alternating 4-face of trivalent interior vertices, or empty.
std::vector<int> square_face(const PlabicGraph& G, const std::vector<int>& cyc) {
  if (cyc.size() != 4 || !real_cycle(G, cyc)) return {};
  std::vector<int> vs;
  for (int h : cyc) vs.push_back(G.origin(h));
  std::set<int> uniq(vs.begin(), vs.end());
  if (uniq.size() != 4) return {};
  for (std::size_t k = 0; k < 4; ++k) {
    int v = vs[k];
    if (!interior(G, v) || G.degree(v) != 3 || G.color(v) == G.color(vs[(k + 1) % 4])) return {};
  }
  return vs;
}

bool externals_leave(const PlabicGraph& G, const std::set<int>& S, int expected) {
  int count = 0;
  for (int v : S)
    for (int h : G.rotation(v))
      if (!S.count(G.target(h))) ++count;
  return count == expected;
}

// Swaps the colors of S and restores bipartiteness on the edges leaving S by removing a
// degree-2 neighbour or inserting one.
void flip_region(PlabicGraph& H, const std::set<int>& S) {
  std::vector<int> ext;
  for (int v : S)
    for (int h : H.rotation(v))
      if (!S.count(H.target(h))) ext.push_back(h);
  for (int v : S) H.set_color(v, opposite(H.color(v)));
  for (int h : ext) {
    if (!H.edge_alive(h / 2)) mismatch("overlapping external edges");
    int v = H.origin(h), u = H.target(h);
    bool removable = !H.is_boundary(u) && H.degree(u) == 2 && !S.count(u);
    if (removable) {
      int other = H.target(H.rotation(u)[0]) == v ? H.target(H.rotation(u)[1]) : H.target(H.rotation(u)[0]);
      if (S.count(other) || other == v) removable = false;
    }
    if (removable) H.splice_out(u);
    else H.subdivide(h, opposite(H.color(v)));
  }
}

void square_raw(PlabicGraph& H, const MoveSite& s) {
  if (s.a < 0 || s.a >= 2 * H.edge_slots() || H.origin(s.a) < 0) mismatch("square site is not a half-edge");
  auto vs = square_face(H, face_through(H, s.a));
  if (vs.empty()) mismatch("no square face at this half-edge");
  std::set<int> S(vs.begin(), vs.end());
  if (!externals_leave(H, S, 4)) mismatch("square has chords");
  flip_region(H, S);
}

bool double_square_region(const PlabicGraph& G, int e, std::set<int>& S) {
  if (e < 0 || e >= G.edge_slots() || !G.edge_alive(e)) return false;
  auto f1 = square_face(G, face_through(G, 2 * e));
  auto f2 = square_face(G, face_through(G, 2 * e + 1));
  if (f1.empty() || f2.empty()) return false;
  S.clear();
  S.insert(f1.begin(), f1.end());
  S.insert(f2.begin(), f2.end());
  return S.size() == 6 && externals_leave(G, S, 4);
}

void double_square_raw(PlabicGraph& H, const MoveSite& s) {
  std::set<int> S;
  if (!double_square_region(H, s.a, S)) mismatch("no double square around this edge");
  flip_region(H, S);
}

bool contract_ok(const PlabicGraph& G, int x) {
  if (x < 0 || x >= G.vertex_slots() || !interior(G, x) || G.degree(x) != 2) return false;
  int a = G.target(G.rotation(x)[0]), b = G.target(G.rotation(x)[1]);
  return a != b && a != x && b != x && interior(G, a) && interior(G, b) && G.color(a) == G.color(b);
}

bool degree2_ok(const PlabicGraph& G, int x) {
  if (x < 0 || x >= G.vertex_slots() || !interior(G, x) || G.degree(x) != 2) return false;
  int a = G.target(G.rotation(x)[0]), b = G.target(G.rotation(x)[1]);
  if (a == x || b == x) return false;
  if (a == b) return G.is_boundary(a);
  return !contract_ok(G, x);
}

void contract_expand_raw(PlabicGraph& H, const MoveSite& s) {
  if (s.expand) {
    if (s.a < 0 || s.a >= H.vertex_slots() || !interior(H, s.a)) mismatch("expansion needs an interior vertex");
    H.split_vertex(s.a, s.b, s.c);
    return;
  }
  if (!contract_ok(H, s.a)) mismatch("no degree-2 vertex between equal colors");
  H.merge_through(s.a);
}

void degree2_raw(PlabicGraph& H, const MoveSite& s) {
  if (!degree2_ok(H, s.a)) mismatch("no removable degree-2 vertex");
  H.splice_out(s.a);
}

bool parallel_ok(const PlabicGraph& G, int e) {
  if (e < 0 || e >= G.edge_slots() || !G.edge_alive(e)) return false;
  auto c = face_through(G, 2 * e);
  if (c.size() != 2 || !real_cycle(G, c)) return false;
  return interior(G, G.origin(2 * e)) && interior(G, G.origin(2 * e + 1));
}

void parallel_raw(PlabicGraph& H, const MoveSite& s) {
  if (!parallel_ok(H, s.a)) mismatch("edge does not bound a bigon");
  H.remove_edge(s.a);
}

// u - x - y - w with x, y of degree 2 and colors alternating.
bool m2_chain(const PlabicGraph& G, int x, int& y) {
  if (x < 0 || x >= G.vertex_slots() || !interior(G, x) || G.degree(x) != 2) return false;
  for (int k = 0; k < 2; ++k) {
    int yy = G.target(G.rotation(x)[z(k)]);
    int u = G.target(G.rotation(x)[z(1 - k)]);
    if (!interior(G, yy) || G.degree(yy) != 2 || !interior(G, u) || yy == x || u == x || u == yy) continue;
    int w = G.target(G.rotation(yy)[0]) == x ? G.target(G.rotation(yy)[1]) : G.target(G.rotation(yy)[0]);
    if (!interior(G, w) || w == x || w == yy) continue;
    if (G.color(u) == G.color(x) || G.color(x) == G.color(yy) || G.color(yy) == G.color(w)) continue;
    y = yy;
    return true;
  }
  return false;
}

void double_m2_raw(PlabicGraph& H, const MoveSite& s) {
  if (s.expand) {
    int e = s.a;
    if (e < 0 || e >= H.edge_slots() || !H.edge_alive(e)) mismatch("expansion needs an edge");
    int u = H.origin(2 * e), w = H.origin(2 * e + 1);
    if (!interior(H, u) || !interior(H, w) || H.color(u) == H.color(w)) mismatch("expansion needs a bicolored interior edge");
    int p = H.subdivide(2 * e, opposite(H.color(u)));
    H.subdivide(H.rotation(p)[1], H.color(u));
    return;
  }
  int y;
  if (!m2_chain(H, s.a, y)) mismatch("no degree-2 chain here");
  H.splice_out(s.a);
  H.splice_out(y);
}

void apply_raw(PlabicGraph& H, MoveKind kind, const MoveSite& s) {
  switch (kind) {
    case MoveKind::square: square_raw(H, s); return;
    case MoveKind::contract_expand: contract_expand_raw(H, s); return;
    case MoveKind::parallel_reduce: parallel_raw(H, s); return;
    case MoveKind::degree2_remove: degree2_raw(H, s); return;
    case MoveKind::double_square: double_square_raw(H, s); return;
    case MoveKind::double_m2: double_m2_raw(H, s); return;
    case MoveKind::sym_pair: mismatch("nested symmetric pair");
  }
}

}  // namespace

const char* move_name(MoveKind k) {
  switch (k) {
    case MoveKind::square: return "square";
    case MoveKind::contract_expand: return "contract_expand";
    case MoveKind::parallel_reduce: return "parallel_reduce";
    case MoveKind::degree2_remove: return "degree2_remove";
    case MoveKind::double_square: return "double_square";
    case MoveKind::double_m2: return "double_m2";
    case MoveKind::sym_pair: return "sym_pair";
  }
  return "?";
}

std::vector<MoveSite> move_sites(const PlabicGraph& G, MoveKind kind) {
  std::vector<MoveSite> out;
  switch (kind) {
    case MoveKind::square:
      for (auto& c : face_cycles(G))
        if (!square_face(G, c).empty()) {
          std::set<int> S;
          for (int h : c) S.insert(G.origin(h));
          if (externals_leave(G, S, 4)) out.push_back({*std::min_element(c.begin(), c.end()), -1, -1, false});
        }
      break;
    case MoveKind::contract_expand:
      for (int v = 0; v < G.vertex_slots(); ++v)
        if (contract_ok(G, v)) out.push_back({v, -1, -1, false});
      break;
    case MoveKind::parallel_reduce:
      for (int e = 0; e < G.edge_slots(); ++e)
        if (parallel_ok(G, e)) out.push_back({e, -1, -1, false});
      break;
    case MoveKind::degree2_remove:
      for (int v = 0; v < G.vertex_slots(); ++v)
        if (degree2_ok(G, v)) out.push_back({v, -1, -1, false});
      break;
    case MoveKind::double_square:
      for (int e = 0; e < G.edge_slots(); ++e) {
        std::set<int> S;
        if (double_square_region(G, e, S)) out.push_back({e, -1, -1, false});
      }
      break;
    case MoveKind::double_m2:
      for (int v = 0; v < G.vertex_slots(); ++v) {
        int y;
        if (m2_chain(G, v, y) && v < y) out.push_back({v, -1, -1, false});
      }
      break;
    case MoveKind::sym_pair:
      break;
  }
  return out;
}

MoveSite mirror_site(const PlabicGraph& G, MoveKind kind, const MoveSite& s) {
  PlabicGraph T = big_t(G);
  Canonical cg = canonical_form(G), ct = canonical_form(T);
  if (cg.code != ct.code) mismatch("graph is not ρ-symmetric");
  std::vector<int> vm(z(G.vertex_slots()), -1), hm(z(2 * G.edge_slots()), -1);
  for (std::size_t k = 0; k < cg.vertex_order.size(); ++k) vm[z(cg.vertex_order[k])] = ct.vertex_order[k];
  for (std::size_t k = 0; k < cg.half_order.size(); ++k) hm[z(cg.half_order[k])] = ct.half_order[k];
  auto V = [&](int v) {
    if (v < 0 || v >= G.vertex_slots() || vm[z(v)] < 0) mismatch("site vertex out of range");
    return vm[z(v)];
  };
  auto Hh = [&](int h) {
    if (h < 0 || h >= 2 * G.edge_slots() || hm[z(h)] < 0) mismatch("site half-edge out of range");
    return hm[z(h)];
  };
  MoveSite r = s;
  switch (kind) {
    case MoveKind::square: r.a = Hh(s.a); break;
    case MoveKind::contract_expand:
      r.a = V(s.a);
      if (s.expand) {
        const auto& rv = G.rotation(s.a);
        if (s.b < 0 || s.b >= static_cast<int>(rv.size())) mismatch("block start out of range");
        int h = Hh(rv[z(s.b)]);
        r.b = G.position(h);
      }
      break;
    case MoveKind::parallel_reduce:
    case MoveKind::double_square: r.a = Hh(2 * s.a) / 2; break;
    case MoveKind::degree2_remove: r.a = V(s.a); break;
    case MoveKind::double_m2: r.a = s.expand ? Hh(2 * s.a) / 2 : V(s.a); break;
    case MoveKind::sym_pair: mismatch("nested symmetric pair");
  }
  return r;
}

PlabicGraph apply_move(const PlabicGraph& G, const Move& mv) {
  PlabicGraph H = G;
  if (mv.kind == MoveKind::sym_pair) {
    MoveSite other = mirror_site(G, mv.inner, mv.site);
    if (other == mv.site) mismatch("site is its own mirror image; use a double move");
    apply_raw(H, mv.inner, mv.site);
    apply_raw(H, mv.inner, other);
  } else {
    apply_raw(H, mv.kind, mv.site);
  }
  H.compact();
  return H;
}

}  // namespace tnnlag
