#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "tnnlag/affperm.hpp"
#include "tnnlag/rational.hpp"

namespace tnnlag {

enum class Color : std::uint8_t { black, white, boundary };

inline Color opposite(Color c) { return c == Color::black ? Color::white : Color::black; }
const char* color_name(Color c);

// Planar bicolored graph in a disk, stored as a combinatorial map.
// Edge e owns half-edges 2e and 2e+1; rotation lists are clockwise.
// Boundary vertices carry labels 1..m in clockwise order; the boundary arcs are implicit.
class PlabicGraph {
 public:
  PlabicGraph() = default;
  // m boundary vertices with ids 0..m-1 and labels 1..m.
  explicit PlabicGraph(int m);

  int m() const { return static_cast<int>(boundary_.size()); }
  int vertex_slots() const { return static_cast<int>(color_.size()); }
  int edge_slots() const { return static_cast<int>(origin_.size() / 2); }
  int num_vertices() const;
  int num_edges() const;
  bool vertex_alive(int v) const { return alive_v_[static_cast<std::size_t>(v)]; }
  bool edge_alive(int e) const { return origin_[static_cast<std::size_t>(2 * e)] >= 0; }

  Color color(int v) const { return color_[static_cast<std::size_t>(v)]; }
  bool is_boundary(int v) const { return color(v) == Color::boundary; }
  const std::vector<int>& rotation(int v) const { return rot_[static_cast<std::size_t>(v)]; }
  int degree(int v) const { return static_cast<int>(rotation(v).size()); }
  int origin(int h) const { return origin_[static_cast<std::size_t>(h)]; }
  static int twin(int h) { return h ^ 1; }
  int target(int h) const { return origin(twin(h)); }
  // Index of h within the rotation at its origin.
  int position(int h) const;
  const std::vector<int>& boundary() const { return boundary_; }
  int boundary_vertex(int label) const;
  int label_of(int v) const;  // 0 for interior vertices
  // Half-edge leaving boundary vertex `label`, or -1 when it has degree 0.
  int leg(int label) const;

  int add_vertex(Color c);
  // Inserts the new half-edges at rotation positions pu, pv (-1 appends).
  int add_edge(int u, int v, int pu = -1, int pv = -1);
  void remove_edge(int e);
  void remove_vertex(int v);  // removes incident edges too
  void set_color(int v, Color c) { color_[static_cast<std::size_t>(v)] = c; }
  // Splits the edge of h (origin x, target y) into x - p - y; h keeps pointing away from x.
  // Returns p.
  int subdivide(int h, Color c);
  // Replaces the rotation of v by `rot`, which must be a permutation of it.
  void set_rotation(int v, std::vector<int> rot);
  // Inserts a boundary vertex with label `label`, shifting later labels up.
  int insert_boundary_vertex(int label);
  void set_boundary(std::vector<int> b) { boundary_ = std::move(b); }
  // Degree-2 vertex x between u and w: removes x and joins u to w, keeping the u-side edge id.
  int splice_out(int x);
  // Degree-2 vertex x between u and w: removes x and merges w into u.  Returns u.
  int merge_through(int x);
  // Moves the rotation block [start, start+len) of v to a new vertex of the same color,
  // joined to v through a relay of the opposite color.  Returns the new vertex.
  int split_vertex(int v, int start, int len);

  // Drops dead slots; returns old->new edge ids (-1 for removed edges).
  std::vector<int> compact();

  bool operator==(const PlabicGraph& o) const;

 private:
  std::vector<Color> color_;
  std::vector<bool> alive_v_;
  std::vector<std::vector<int>> rot_;
  std::vector<int> origin_;  // -1 for dead half-edges
  std::vector<int> boundary_;
};

struct PlabicNetwork {
  PlabicGraph graph;
  std::vector<Rational> weight;  // indexed by edge id
};

// Straight-line drawing; rotations are read off from coordinates.
struct Drawing {
  struct Node {
    Color color;
    double x, y;
  };
  int m = 0;
  std::vector<std::pair<double, double>> boundary;  // boundary points, labels 1..m
  std::vector<Node> interior;                       // ids m, m+1, ...
  struct Edge {
    int u, v;
    Rational w = 1;
  };
  std::vector<Edge> edges;
};
PlabicNetwork from_drawing(const Drawing& d);

int faces(const PlabicGraph& G);
// Face cycles of the map with boundary arcs added; arc half-edges have ids >= 2 * edge_slots().
std::vector<std::vector<int>> face_cycles(const PlabicGraph& G);
// Checks boundary degrees, closure of the face traversal, genus zero and boundary order.
void check_map(const PlabicGraph& G);
bool is_bipartite(const PlabicGraph& G);

AffinePerm trip_permutation(const PlabicGraph& G);

PlabicGraph rot(const PlabicGraph& G);
PlabicGraph swap(const PlabicGraph& G);
PlabicGraph big_t(const PlabicGraph& G);

struct Canonical {
  std::vector<long> code;
  std::vector<int> vertex_order;  // canonical index -> vertex id
  std::vector<int> half_order;    // canonical index -> half-edge id
};
Canonical canonical_form(const PlabicGraph& G);
bool same_map(const PlabicGraph& A, const PlabicGraph& B);
std::string graph_hash(const PlabicGraph& G);
bool is_rho_symmetric_graph(const PlabicGraph& G);

PlabicGraph lollipop_graph(const AffinePerm& f);

struct BridgeResult {
  PlabicGraph graph;
  int edge;  // the bridge edge
};
// Bridge between i and i+1 whose endpoint next to i has color `at_i`
// (white: x_i on points, black: y_i on points).
BridgeResult add_bridge(const PlabicGraph& G, int i, Color at_i);
PlabicGraph add_lollipop(const PlabicGraph& G, int i, Color c);

struct SymBridgeResult {
  PlabicGraph graph;
  std::vector<int> edges;   // bridge edges (one in the m = 2 case)
  bool merged;              // the two bridges were replaced by one of double weight
};
SymBridgeResult sym_bridge(const PlabicGraph& G, int i);
PlabicGraph sym_lollipop(const PlabicGraph& G, int i);

// Removes degree-2 vertices and dangling leaf gadgets and reduces parallel edges.
PlabicGraph normalize(const PlabicGraph& G);

struct ConstructionStep {
  enum Kind { base, sym_lollipop, sym_bridge } kind;
  int i = 0;  // position, unused for base
  int n = 0;  // half the boundary size after the step
  AffinePerm perm;  // permutation reached after the step
};

struct Construction {
  PlabicGraph graph;
  std::vector<ConstructionStep> steps;
};
Construction bridge_construction(const AffinePerm& f);
// Chooses among the candidate descents exactly as bridge_construction does.
int construction_descent(const AffinePerm& f);
PlabicGraph replay(const std::vector<ConstructionStep>& steps);
// One positive weight per sym_bridge step, in order.
PlabicNetwork replay_network(const std::vector<ConstructionStep>& steps, const std::vector<Rational>& weights);
int bridge_step_count(const std::vector<ConstructionStep>& steps);

// Reduced graph for any f in B(k, m) from a bridge decomposition (lollipops, then white-at-i bridges).
struct BridgeDecomposition {
  struct Step {
    enum Kind { lollipop, bridge } kind;
    int i;
    Color color;  // lollipop color
  };
  int m0 = 0;
  std::vector<Step> steps;
};
BridgeDecomposition bridge_decomposition(const AffinePerm& f);
PlabicNetwork decomposition_network(const BridgeDecomposition& d, const std::vector<Rational>& weights);

int minimal_symmetric_faces(const AffinePerm& f);
bool is_reduced(const PlabicGraph& G, const AffinePerm& f);
bool is_minimal_symmetric(const PlabicGraph& G, const AffinePerm& f);

enum class MoveKind { square, contract_expand, parallel_reduce, degree2_remove, double_square, double_m2, sym_pair };
// square: a = half-edge on the face.  contract_expand: a = degree-2 vertex, or with expand
// a = vertex, b = block start, c = block length.  parallel_reduce: a = edge removed.
// degree2_remove: a = vertex.  double_square: a = central edge.  double_m2: a = first degree-2
// vertex of the chain, or with expand a = central edge.
struct MoveSite {
  int a = -1, b = -1, c = -1;
  bool expand = false;
  bool operator==(const MoveSite&) const = default;
};
struct Move {
  MoveKind kind;
  MoveSite site;
  MoveKind inner = MoveKind::square;  // for sym_pair
};
PlabicGraph apply_move(const PlabicGraph& G, const Move& mv);
const char* move_name(MoveKind k);
// All sites where `kind` applies (contract direction only for contract_expand and double_m2).
std::vector<MoveSite> move_sites(const PlabicGraph& G, MoveKind kind);
// The site in G that is the image of `s` under the symmetry G = T(G).
MoveSite mirror_site(const PlabicGraph& G, MoveKind kind, const MoveSite& s);

nlohmann::json to_json(const PlabicGraph& G);
PlabicGraph graph_from_json(const nlohmann::json& j);
nlohmann::json to_json(const PlabicNetwork& N);
PlabicNetwork network_from_json(const nlohmann::json& j);
std::string to_dot(const PlabicGraph& G);
std::string to_svg(const PlabicGraph& G);

}  // namespace tnnlag
