#include <algorithm>
#include <cmath>
#include <cstdio>
#include <deque>
#include <map>
#include <numeric>
#include <sstream>

#include "tnnlag/error.hpp"
#include "tnnlag/plabic.hpp"

namespace tnnlag {

namespace {

std::size_t z(int i) { return static_cast<std::size_t>(i); }

}  // namespace

const char* color_name(Color c) {
  switch (c) {
    case Color::black: return "black";
    case Color::white: return "white";
    case Color::boundary: return "boundary";
  }
  return "?";
}

PlabicGraph::PlabicGraph(int m) {
  for (int i = 0; i < m; ++i) boundary_.push_back(add_vertex(Color::boundary));
}

int PlabicGraph::num_vertices() const {
  return static_cast<int>(std::count(alive_v_.begin(), alive_v_.end(), true));
}

int PlabicGraph::num_edges() const {
  int c = 0;
  for (int e = 0; e < edge_slots(); ++e) c += edge_alive(e);
  return c;
}

int PlabicGraph::position(int h) const {
  const auto& r = rotation(origin(h));
  auto it = std::find(r.begin(), r.end(), h);
  if (it == r.end()) throw Error(ErrorKind::MalformedMap, "half-edge missing from its rotation");
  return static_cast<int>(it - r.begin());
}

int PlabicGraph::boundary_vertex(int label) const {
  if (label < 1 || label > m()) throw Error(ErrorKind::IndexOutOfRange, "boundary label " + std::to_string(label));
  return boundary_[z(label - 1)];
}

int PlabicGraph::label_of(int v) const {
  auto it = std::find(boundary_.begin(), boundary_.end(), v);
  return it == boundary_.end() ? 0 : static_cast<int>(it - boundary_.begin()) + 1;
}

int PlabicGraph::leg(int label) const {
  const auto& r = rotation(boundary_vertex(label));
  return r.empty() ? -1 : r.front();
}

int PlabicGraph::add_vertex(Color c) {
  color_.push_back(c);
  alive_v_.push_back(true);
  rot_.emplace_back();
  return vertex_slots() - 1;
}

int PlabicGraph::add_edge(int u, int v, int pu, int pv) {
  int e = edge_slots();
  origin_.push_back(u);
  origin_.push_back(v);
  auto ins = [](std::vector<int>& r, int p, int h) {
    if (p < 0 || p > static_cast<int>(r.size())) r.push_back(h);
    else r.insert(r.begin() + p, h);
  };
  ins(rot_[z(u)], pu, 2 * e);
  ins(rot_[z(v)], pv, 2 * e + 1);
  return e;
}

void PlabicGraph::remove_edge(int e) {
  for (int h : {2 * e, 2 * e + 1}) {
    auto& r = rot_[z(origin(h))];
    r.erase(std::find(r.begin(), r.end(), h));
    origin_[z(h)] = -1;
  }
}

void PlabicGraph::remove_vertex(int v) {
  while (!rot_[z(v)].empty()) remove_edge(rot_[z(v)].front() / 2);
  alive_v_[z(v)] = false;
  auto it = std::find(boundary_.begin(), boundary_.end(), v);
  if (it != boundary_.end()) boundary_.erase(it);
}

int PlabicGraph::subdivide(int h, Color c) {
  int y = target(h);
  int ty = twin(h);
  int py = position(ty);
  int p = add_vertex(c);
  origin_[z(ty)] = p;
  rot_[z(p)].push_back(ty);
  int e = edge_slots();
  origin_.push_back(p);
  origin_.push_back(y);
  rot_[z(p)].push_back(2 * e);
  rot_[z(y)][z(py)] = 2 * e + 1;
  return p;
}

void PlabicGraph::set_rotation(int v, std::vector<int> r) {
  auto a = r, b = rot_[z(v)];
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (a != b) throw Error(ErrorKind::MalformedMap, "rotation is not a permutation of the incident half-edges");
  rot_[z(v)] = std::move(r);
}

int PlabicGraph::insert_boundary_vertex(int label) {
  if (label < 1 || label > m() + 1) throw Error(ErrorKind::IndexOutOfRange, "boundary label " + std::to_string(label));
  int v = add_vertex(Color::boundary);
  boundary_.insert(boundary_.begin() + (label - 1), v);
  return v;
}

int PlabicGraph::splice_out(int x) {
  if (degree(x) != 2 || is_boundary(x)) throw Error(ErrorKind::SiteMismatch, "splice needs an interior vertex of degree 2");
  int h1 = rot_[z(x)][0], h2 = rot_[z(x)][1];
  int w = target(h2);
  int t2 = twin(h2);
  if (h1 / 2 == h2 / 2) throw Error(ErrorKind::SiteMismatch, "loop at degree-2 vertex");
  int p = position(t2);
  origin_[z(h1)] = w;
  rot_[z(w)][z(p)] = h1;
  origin_[z(h2)] = -1;
  origin_[z(t2)] = -1;
  rot_[z(x)].clear();
  alive_v_[z(x)] = false;
  return h1 / 2;
}

int PlabicGraph::merge_through(int x) {
  if (degree(x) != 2 || is_boundary(x)) throw Error(ErrorKind::SiteMismatch, "merge needs an interior vertex of degree 2");
  int h1 = rot_[z(x)][0], h2 = rot_[z(x)][1];
  int u = target(h1), w = target(h2);
  if (u == w || is_boundary(u) || is_boundary(w)) throw Error(ErrorKind::SiteMismatch, "merge needs two distinct interior neighbours");
  auto cyc = [&](int v, int h) {
    const auto& r = rot_[z(v)];
    int p = position(h);
    std::vector<int> out;
    for (std::size_t s = 1; s < r.size(); ++s) out.push_back(r[(z(p) + s) % r.size()]);
    return out;
  };
  auto a = cyc(u, twin(h1));
  auto b = cyc(w, twin(h2));
  for (int h : b) origin_[z(h)] = u;
  a.insert(a.end(), b.begin(), b.end());
  rot_[z(u)] = std::move(a);
  rot_[z(w)].clear();
  alive_v_[z(w)] = false;
  for (int h : {h1, twin(h1), h2, twin(h2)}) origin_[z(h)] = -1;
  rot_[z(x)].clear();
  alive_v_[z(x)] = false;
  return u;
}

int PlabicGraph::split_vertex(int v, int start, int len) {
  const auto r = rot_[z(v)];
  int d = static_cast<int>(r.size());
  if (is_boundary(v) || start < 0 || start >= d || len < 1 || len >= d)
    throw Error(ErrorKind::SiteMismatch, "invalid split block");
  std::vector<int> block, rest;
  for (int s = 0; s < d; ++s) (s < len ? block : rest).push_back(r[z((start + s) % d)]);
  int w = add_vertex(color(v));
  int x = add_vertex(opposite(color(v)));
  for (int h : block) origin_[z(h)] = w;
  rot_[z(v)] = rest;
  rot_[z(w)] = block;
  int e1 = add_edge(v, x);
  int e2 = add_edge(w, x);
  std::rotate(rot_[z(v)].rbegin(), rot_[z(v)].rbegin() + 1, rot_[z(v)].rend());
  std::rotate(rot_[z(w)].rbegin(), rot_[z(w)].rbegin() + 1, rot_[z(w)].rend());
  (void)e1;
  (void)e2;
  return w;
}

std::vector<int> PlabicGraph::compact() {
  std::vector<int> vmap(z(vertex_slots()), -1), emap(z(edge_slots()), -1);
  int nv = 0, ne = 0;
  for (int v = 0; v < vertex_slots(); ++v)
    if (vertex_alive(v)) vmap[z(v)] = nv++;
  for (int e = 0; e < edge_slots(); ++e)
    if (edge_alive(e)) emap[z(e)] = ne++;
  auto hmap = [&](int h) { return 2 * emap[z(h / 2)] + (h & 1); };
  PlabicGraph g;
  g.color_.resize(z(nv));
  g.alive_v_.assign(z(nv), true);
  g.rot_.resize(z(nv));
  g.origin_.assign(z(2 * ne), -1);
  for (int v = 0; v < vertex_slots(); ++v) {
    if (!vertex_alive(v)) continue;
    int nvid = vmap[z(v)];
    g.color_[z(nvid)] = color(v);
    for (int h : rotation(v)) {
      g.rot_[z(nvid)].push_back(hmap(h));
      g.origin_[z(hmap(h))] = nvid;
    }
  }
  for (int b : boundary_) g.boundary_.push_back(vmap[z(b)]);
  *this = std::move(g);
  return emap;
}

bool PlabicGraph::operator==(const PlabicGraph& o) const {
  return color_ == o.color_ && alive_v_ == o.alive_v_ && rot_ == o.rot_ && origin_ == o.origin_ &&
         boundary_ == o.boundary_;
}

PlabicNetwork from_drawing(const Drawing& d) {
  PlabicNetwork N{PlabicGraph(d.m), {}};
  std::vector<std::pair<double, double>> pos = d.boundary;
  for (const auto& n : d.interior) {
    N.graph.add_vertex(n.color);
    pos.emplace_back(n.x, n.y);
  }
  for (const auto& e : d.edges) {
    N.graph.add_edge(e.u, e.v);
    N.weight.push_back(e.w);
  }
  for (int v = 0; v < N.graph.vertex_slots(); ++v) {
    auto r = N.graph.rotation(v);
    auto ang = [&](int h) {
      auto [x0, y0] = pos[z(v)];
      auto [x1, y1] = pos[z(N.graph.target(h))];
      return std::atan2(y1 - y0, x1 - x0);
    };
    // clockwise = decreasing angle
    std::sort(r.begin(), r.end(), [&](int a, int b) { return ang(a) > ang(b); });
    N.graph.set_rotation(v, r);
  }
  check_map(N.graph);
  return N;
}

namespace {

// The map with boundary arcs b_i -> b_{i+1} added.  Arc i uses half-edges base+2i (forward) and base+2i+1.
struct Augmented {
  std::vector<std::vector<int>> rot;
  std::vector<int> origin;
  std::vector<int> pos;
  int base = 0;

  explicit Augmented(const PlabicGraph& G) {
    int m = G.m();
    base = 2 * G.edge_slots();
    rot.resize(z(G.vertex_slots()));
    origin.assign(z(base + 2 * m), -1);
    for (int v = 0; v < G.vertex_slots(); ++v) {
      if (!G.vertex_alive(v)) continue;
      rot[z(v)] = G.rotation(v);
      for (int h : G.rotation(v)) origin[z(h)] = v;
    }
    for (int i = 0; i < m; ++i) {
      int b = G.boundary()[z(i)];
      int fwd = base + 2 * i;
      int back_in = base + 2 * ((i + m - 1) % m) + 1;
      std::vector<int> r{fwd};
      for (int h : G.rotation(b)) r.push_back(h);
      r.push_back(back_in);
      rot[z(b)] = r;
      origin[z(fwd)] = b;
      origin[z(back_in)] = b;
    }
    pos.assign(origin.size(), -1);
    for (std::size_t v = 0; v < rot.size(); ++v)
      for (std::size_t p = 0; p < rot[v].size(); ++p) pos[z(rot[v][p])] = static_cast<int>(p);
  }

  int next(int h) const {
    int t = h ^ 1;
    int v = origin[z(t)];
    const auto& r = rot[z(v)];
    return r[(z(pos[z(t)]) + 1) % r.size()];
  }
};

struct FaceData {
  int cycles = 0;
  int components = 0;
  std::vector<std::vector<int>> cycle_list;
};

FaceData trace(const PlabicGraph& G, bool keep_cycles) {
  Augmented A(G);
  FaceData fd;
  std::vector<char> seen(A.origin.size(), 0);
  std::vector<int> comp(z(G.vertex_slots()), -1);
  // components by flood fill over augmented edges
  int nc = 0;
  std::vector<int> cv, ce, cf;
  for (int v = 0; v < G.vertex_slots(); ++v) {
    if (!G.vertex_alive(v) || comp[z(v)] >= 0) continue;
    std::deque<int> q{v};
    comp[z(v)] = nc;
    int nvv = 0, nhe = 0;
    while (!q.empty()) {
      int x = q.front();
      q.pop_front();
      ++nvv;
      for (int h : A.rot[z(x)]) {
        ++nhe;
        int y = A.origin[z(h ^ 1)];
        if (y < 0) throw Error(ErrorKind::MalformedMap, "dangling half-edge");
        if (comp[z(y)] < 0) {
          comp[z(y)] = nc;
          q.push_back(y);
        }
      }
    }
    cv.push_back(nvv);
    ce.push_back(nhe / 2);
    cf.push_back(0);
    ++nc;
  }
  for (std::size_t h = 0; h < A.origin.size(); ++h) {
    if (A.origin[h] < 0 || seen[h]) continue;
    std::vector<int> cyc;
    int x = static_cast<int>(h);
    std::size_t guard = 0;
    while (!seen[z(x)]) {
      seen[z(x)] = 1;
      cyc.push_back(x);
      x = A.next(x);
      if (++guard > A.origin.size()) throw Error(ErrorKind::MalformedMap, "face traversal does not close");
    }
    if (x != static_cast<int>(h)) throw Error(ErrorKind::MalformedMap, "face traversal does not close");
    ++cf[z(comp[z(A.origin[h])])];
    if (keep_cycles) fd.cycle_list.push_back(std::move(cyc));
  }
  for (int c = 0; c < nc; ++c) {
    int f = cf[z(c)] == 0 ? 1 : cf[z(c)];  // isolated vertex
    if (cv[z(c)] - ce[z(c)] + f != 2) throw Error(ErrorKind::MalformedMap, "map is not planar in the disk");
    fd.cycles += f;
  }
  fd.components = nc;
  return fd;
}

}  // namespace

int faces(const PlabicGraph& G) {
  if (G.num_vertices() == 0) return 1;
  FaceData fd = trace(G, false);
  int outer = G.m() > 0 ? 1 : 0;
  return fd.cycles - outer - (fd.components - 1);
}

void check_map(const PlabicGraph& G) {
  std::vector<int> count(z(2 * G.edge_slots()), 0);
  for (int v = 0; v < G.vertex_slots(); ++v) {
    if (!G.vertex_alive(v)) continue;
    if (G.is_boundary(v) && G.degree(v) > 1) throw Error(ErrorKind::MalformedMap, "boundary vertex of degree > 1");
    for (int h : G.rotation(v)) {
      if (h < 0 || h >= 2 * G.edge_slots() || G.origin(h) != v)
        throw Error(ErrorKind::MalformedMap, "rotation lists a foreign half-edge");
      ++count[z(h)];
    }
  }
  for (int h = 0; h < 2 * G.edge_slots(); ++h)
    if (G.origin(h) >= 0 && count[z(h)] != 1) throw Error(ErrorKind::MalformedMap, "half-edge not in exactly one rotation");
  for (int b : G.boundary())
    if (!G.vertex_alive(b) || !G.is_boundary(b)) throw Error(ErrorKind::MalformedMap, "boundary list names a non-boundary vertex");
  for (int v = 0; v < G.vertex_slots(); ++v)
    if (G.vertex_alive(v) && G.is_boundary(v) && G.label_of(v) == 0)
      throw Error(ErrorKind::MalformedMap, "unlabeled boundary vertex");
  trace(G, false);
}

bool is_bipartite(const PlabicGraph& G) {
  for (int e = 0; e < G.edge_slots(); ++e) {
    if (!G.edge_alive(e)) continue;
    int u = G.origin(2 * e), v = G.origin(2 * e + 1);
    if (!G.is_boundary(u) && !G.is_boundary(v) && G.color(u) == G.color(v)) return false;
  }
  return true;
}

std::vector<std::vector<int>> face_cycles(const PlabicGraph& G) { return trace(G, true).cycle_list; }

AffinePerm trip_permutation(const PlabicGraph& G) {
  int m = G.m();
  std::vector<int> w(z(m));
  int limit = 4 * G.edge_slots() + 4;
  for (int i = 1; i <= m; ++i) {
    int h = G.leg(i);
    if (h < 0) throw Error(ErrorKind::DanglingStrand, "boundary vertex " + std::to_string(i) + " has no edge");
    int first = G.target(h);
    int steps = 0;
    int v = first;
    while (!G.is_boundary(v)) {
      if (++steps > limit) throw Error(ErrorKind::DanglingStrand, "strand from " + std::to_string(i) + " does not exit");
      const auto& r = G.rotation(v);
      int d = static_cast<int>(r.size());
      int p = G.position(PlabicGraph::twin(h));
      int q = G.color(v) == Color::black ? (p + d - 1) % d : (p + 1) % d;
      h = r[z(q)];
      v = G.target(h);
    }
    int j = G.label_of(v);
    if (j > i) w[z(i - 1)] = j;
    else if (j < i) w[z(i - 1)] = j + m;
    else w[z(i - 1)] = G.is_boundary(first) || G.color(first) == Color::black ? i : i + m;
  }
  AffinePerm f(m, w);
  if (!f.is_bounded()) throw Error(ErrorKind::DanglingStrand, "strands do not form a bounded permutation");
  long s = 0;
  for (int i = 1; i <= m; ++i) s += w[z(i - 1)] - i;
  if (m > 0 && s % m != 0) throw Error(ErrorKind::DanglingStrand, "strand permutation has no type");
  return f;
}

PlabicGraph rot(const PlabicGraph& G) {
  int m = G.m();
  if (m % 2 != 0) throw Error(ErrorKind::OddBoundary, "rot needs an even number of boundary vertices");
  int n = m / 2;
  std::vector<int> b(z(m));
  for (int i = 0; i < m; ++i) b[z((i + n) % m)] = G.boundary()[z(i)];
  PlabicGraph H = G;
  H.set_boundary(b);
  return H;
}

PlabicGraph swap(const PlabicGraph& G) {
  PlabicGraph H = G;
  for (int v = 0; v < H.vertex_slots(); ++v)
    if (H.vertex_alive(v) && !H.is_boundary(v)) H.set_color(v, opposite(H.color(v)));
  return H;
}

PlabicGraph big_t(const PlabicGraph& G) { return swap(rot(G)); }

Canonical canonical_form(const PlabicGraph& G) {
  Canonical c;
  int V = G.vertex_slots();
  std::vector<int> idx(z(V), -1), start(z(V), 0);
  std::deque<int> q;
  auto visit = [&](int v, int s) {
    idx[z(v)] = static_cast<int>(c.vertex_order.size());
    start[z(v)] = s;
    c.vertex_order.push_back(v);
    q.push_back(v);
  };
  for (int b : G.boundary()) visit(b, 0);
  auto run = [&]() {
    while (!q.empty()) {
      int v = q.front();
      q.pop_front();
      const auto& r = G.rotation(v);
      for (std::size_t s = 0; s < r.size(); ++s) {
        int h = r[(z(start[z(v)]) + s) % r.size()];
        int u = G.target(h);
        if (idx[z(u)] < 0) visit(u, G.position(PlabicGraph::twin(h)));
      }
    }
  };
  run();
  for (int v = 0; v < V; ++v)
    if (G.vertex_alive(v) && idx[z(v)] < 0) {
      visit(v, 0);
      run();
    }
  std::vector<int> hpos(z(2 * G.edge_slots()), -1);
  for (int v : c.vertex_order) {
    const auto& r = G.rotation(v);
    for (std::size_t s = 0; s < r.size(); ++s) hpos[z(r[(z(start[z(v)]) + s) % r.size()])] = static_cast<int>(s);
  }
  c.code.push_back(G.m());
  c.code.push_back(static_cast<long>(c.vertex_order.size()));
  for (int v : c.vertex_order) {
    const auto& r = G.rotation(v);
    c.code.push_back(static_cast<long>(G.color(v)));
    c.code.push_back(static_cast<long>(r.size()));
    for (std::size_t s = 0; s < r.size(); ++s) {
      int h = r[(z(start[z(v)]) + s) % r.size()];
      c.half_order.push_back(h);
      c.code.push_back(idx[z(G.target(h))]);
      c.code.push_back(hpos[z(PlabicGraph::twin(h))]);
    }
  }
  return c;
}

bool same_map(const PlabicGraph& A, const PlabicGraph& B) { return canonical_form(A).code == canonical_form(B).code; }

std::string graph_hash(const PlabicGraph& G) {
  std::uint64_t h = 1469598103934665603ULL;
  for (long x : canonical_form(G).code) {
    h ^= static_cast<std::uint64_t>(x) + 0x9e3779b97f4a7c15ULL;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

bool is_rho_symmetric_graph(const PlabicGraph& G) { return G.m() % 2 == 0 && same_map(G, big_t(G)); }

nlohmann::json to_json(const PlabicGraph& G0) {
  PlabicGraph G = G0;
  G.compact();
  nlohmann::json j;
  j["m"] = G.m();
  j["vertices"] = nlohmann::json::array();
  j["rotation"] = nlohmann::json::object();
  for (int v = 0; v < G.vertex_slots(); ++v) {
    j["vertices"].push_back({{"id", v}, {"color", color_name(G.color(v))}});
    j["rotation"][std::to_string(v)] = G.rotation(v);
  }
  j["edges"] = nlohmann::json::array();
  for (int e = 0; e < G.edge_slots(); ++e) j["edges"].push_back({2 * e, 2 * e + 1});
  j["boundary"] = G.boundary();
  return j;
}

PlabicGraph graph_from_json(const nlohmann::json& j) {
  try {
    PlabicGraph G;
    std::map<int, int> vid;
    for (const auto& v : j.at("vertices")) {
      std::string c = v.at("color").get<std::string>();
      Color col = c == "black" ? Color::black : c == "white" ? Color::white : c == "boundary" ? Color::boundary
                                                                                                : throw Error(ErrorKind::ParseError, "bad color " + c);
      int id = v.at("id").get<int>();
      if (vid.count(id)) throw Error(ErrorKind::ParseError, "duplicate vertex id");
      vid[id] = G.add_vertex(col);
    }
    std::map<int, int> hnew;  // json half-edge id -> internal half-edge id
    int e = 0;
    for (const auto& p : j.at("edges")) {
      int a = p.at(0).get<int>(), b = p.at(1).get<int>();
      if (a == b || hnew.count(a) || hnew.count(b)) throw Error(ErrorKind::ParseError, "bad edge pairing");
      hnew[a] = 2 * e;
      hnew[b] = 2 * e + 1;
      ++e;
    }
    std::vector<int> origin(z(2 * e), -1);
    std::vector<std::vector<int>> rots(z(G.vertex_slots()));
    for (const auto& [key, lst] : j.at("rotation").items()) {
      int id = std::stoi(key);
      if (!vid.count(id)) throw Error(ErrorKind::ParseError, "rotation for unknown vertex");
      int v = vid[id];
      for (const auto& hj : lst) {
        int h = hj.get<int>();
        if (!hnew.count(h)) throw Error(ErrorKind::ParseError, "rotation names unknown half-edge");
        int hh = hnew[h];
        if (origin[z(hh)] >= 0) throw Error(ErrorKind::ParseError, "half-edge in two rotations");
        origin[z(hh)] = v;
        rots[z(v)].push_back(hh);
      }
    }
    for (int x = 0; x < e; ++x) {
      if (origin[z(2 * x)] < 0 || origin[z(2 * x + 1)] < 0) throw Error(ErrorKind::ParseError, "half-edge without origin");
      G.add_edge(origin[z(2 * x)], origin[z(2 * x + 1)]);
    }
    for (int v = 0; v < G.vertex_slots(); ++v) G.set_rotation(v, rots[z(v)]);
    std::vector<int> b;
    for (const auto& x : j.at("boundary")) {
      int id = x.get<int>();
      if (!vid.count(id)) throw Error(ErrorKind::ParseError, "boundary names unknown vertex");
      b.push_back(vid[id]);
    }
    if (static_cast<int>(b.size()) != j.at("m").get<int>()) throw Error(ErrorKind::ParseError, "boundary length differs from m");
    G.set_boundary(b);
    check_map(G);
    return G;
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorKind::ParseError, ex.what());
  }
}

nlohmann::json to_json(const PlabicNetwork& N0) {
  PlabicNetwork N = N0;
  N.weight.resize(z(N.graph.edge_slots()), Rational(1));
  auto emap = N.graph.compact();
  nlohmann::json j;
  j["graph"] = to_json(N.graph);
  std::vector<Rational> w(z(N.graph.edge_slots()));
  for (std::size_t e = 0; e < emap.size(); ++e)
    if (emap[e] >= 0) w[z(emap[e])] = N.weight[e];
  j["weights"] = nlohmann::json::object();
  for (std::size_t e = 0; e < w.size(); ++e) j["weights"][std::to_string(e)] = to_string(w[e]);
  return j;
}

PlabicNetwork network_from_json(const nlohmann::json& j) {
  try {
    PlabicNetwork N{graph_from_json(j.at("graph")), {}};
    N.weight.assign(z(N.graph.edge_slots()), Rational(1));
    if (j.contains("weights"))
      for (const auto& [k, v] : j.at("weights").items()) {
        int e = std::stoi(k);
        if (e < 0 || e >= N.graph.edge_slots()) throw Error(ErrorKind::ParseError, "weight for unknown edge");
        Rational w = v.is_string() ? parse_rational(v.get<std::string>()) : Rational(v.get<long>());
        if (sgn(w) <= 0) throw Error(ErrorKind::ParseError, "edge weights must be positive");
        N.weight[z(e)] = w;
      }
    return N;
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorKind::ParseError, ex.what());
  }
}

namespace {

// Boundary on the unit circle, label 1 at 90 - 180/m degrees, clockwise; interior by Tutte averaging.
std::vector<std::pair<double, double>> layout(const PlabicGraph& G) {
  int m = G.m();
  std::vector<std::pair<double, double>> p(z(G.vertex_slots()), {0.0, 0.0});
  const double pi = std::acos(-1.0);
  for (int i = 0; i < m; ++i) {
    double a = (90.0 - 180.0 / m - 360.0 * i / m) * pi / 180.0;
    p[z(G.boundary()[z(i)])] = {std::cos(a), std::sin(a)};
  }
  for (int it = 0; it < 2000; ++it)
    for (int v = 0; v < G.vertex_slots(); ++v) {
      if (!G.vertex_alive(v) || G.is_boundary(v) || G.degree(v) == 0) continue;
      double x = 0, y = 0;
      for (int h : G.rotation(v)) {
        x += p[z(G.target(h))].first;
        y += p[z(G.target(h))].second;
      }
      p[z(v)] = {x / G.degree(v), y / G.degree(v)};
    }
  return p;
}

}  // namespace

std::string to_dot(const PlabicGraph& G) {
  auto p = layout(G);
  std::ostringstream os;
  os << "graph plabic {\n  node [shape=circle, width=0.15, fixedsize=true, label=\"\"];\n";
  for (int v = 0; v < G.vertex_slots(); ++v) {
    if (!G.vertex_alive(v)) continue;
    os << "  v" << v << " [pos=\"" << 3 * p[z(v)].first << ',' << 3 * p[z(v)].second << "!\"";
    if (G.is_boundary(v)) os << ", shape=plaintext, label=\"" << G.label_of(v) << "\"";
    else if (G.color(v) == Color::black) os << ", style=filled, fillcolor=black";
    else os << ", style=filled, fillcolor=white";
    os << "];\n";
  }
  for (int e = 0; e < G.edge_slots(); ++e)
    if (G.edge_alive(e)) os << "  v" << G.origin(2 * e) << " -- v" << G.origin(2 * e + 1) << ";\n";
  os << "}\n";
  return os.str();
}

std::string to_svg(const PlabicGraph& G) {
  auto p = layout(G);
  auto X = [&](int v) { return 150 + 120 * p[z(v)].first; };
  auto Y = [&](int v) { return 150 - 120 * p[z(v)].second; };
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"300\" height=\"300\" viewBox=\"0 0 300 300\">\n";
  os << "<circle cx=\"150\" cy=\"150\" r=\"120\" fill=\"none\" stroke=\"gray\"/>\n";
  for (int e = 0; e < G.edge_slots(); ++e) {
    if (!G.edge_alive(e)) continue;
    int u = G.origin(2 * e), v = G.origin(2 * e + 1);
    os << "<line x1=\"" << X(u) << "\" y1=\"" << Y(u) << "\" x2=\"" << X(v) << "\" y2=\"" << Y(v)
       << "\" stroke=\"steelblue\" stroke-width=\"2\"/>\n";
  }
  for (int v = 0; v < G.vertex_slots(); ++v) {
    if (!G.vertex_alive(v)) continue;
    if (G.is_boundary(v)) {
      os << "<text x=\"" << 150 + 135 * p[z(v)].first << "\" y=\"" << 154 - 135 * p[z(v)].second
         << "\" font-size=\"12\" text-anchor=\"middle\">" << G.label_of(v) << "</text>\n";
    } else {
      os << "<circle cx=\"" << X(v) << "\" cy=\"" << Y(v) << "\" r=\"5\" stroke=\"black\" fill=\""
         << (G.color(v) == Color::black ? "black" : "white") << "\"/>\n";
    }
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace tnnlag
