#include "figures.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <set>

using tnnlag::Color;
using tnnlag::Drawing;

namespace figures {

namespace {

const double kPi = std::acos(-1.0);

std::pair<double, double> polar(double r, double deg) {
  return {r * std::cos(deg * kPi / 180), r * std::sin(deg * kPi / 180)};
}

// Boundary i at 60 * (2 - i) degrees on the circle of radius 3.
std::vector<std::pair<double, double>> hexagon() {
  std::vector<std::pair<double, double>> b;
  for (int i = 1; i <= 6; ++i) b.push_back(polar(3, 60.0 * (2 - i)));
  return b;
}

}  // namespace

tnnlag::PlabicNetwork permutation_graph() { return two_graphs_left(); }

tnnlag::PlabicNetwork two_graphs_left() {
  Drawing d;
  d.m = 6;
  d.boundary = hexagon();
  // 6: W(2∠60)  7: B(-√3, 1)  8: W(-2∠60)  9: B(.8,-.5)  10: W(2∠-30)
  auto [ax, ay] = polar(2, 60);
  auto [cx, cy] = polar(2, -30);
  d.interior = {{Color::white, ax, ay},
                {Color::black, -cx, -cy},
                {Color::white, -ax, -ay},
                {Color::black, 0.8, -0.5},
                {Color::white, cx, cy}};
  d.edges = {{0, 6, 1}, {6, 7, 3}, {7, 8, 3}, {3, 8, 1}, {8, 9, 1}, {9, 6, 3},
             {9, 10, 3}, {1, 10, 1}, {10, 2, 1}, {4, 7, 2}, {7, 5, 2}};
  return tnnlag::from_drawing(d);
}

tnnlag::PlabicNetwork two_graphs_right() {
  Drawing d;
  d.m = 6;
  d.boundary = hexagon();
  auto [ax, ay] = polar(2, 60);
  auto [cx, cy] = polar(2, -30);
  // 6: W(2∠60)  7: B(0,.7)  8: W(-1.1,-.3)  9: B(2∠-120)  10: W(0,-.7)  11: B(1.1,.3)
  // 12: W(2∠-30)  13: B(-2∠-30)
  d.interior = {{Color::white, ax, ay},  {Color::black, 0, 0.7},  {Color::white, -1.1, -0.3},
                {Color::black, -ax, -ay}, {Color::white, 0, -0.7}, {Color::black, 1.1, 0.3},
                {Color::white, cx, cy},  {Color::black, -cx, -cy}};
  d.edges = {{0, 6, 1},  {6, 7, 1},  {7, 8, 2},  {8, 9, 1},  {3, 9, 1},  {9, 10, 1}, {10, 11, 2}, {11, 6, 1},
             {7, 10, 2}, {11, 12, 3}, {8, 13, 3}, {1, 12, 1}, {12, 2, 1}, {4, 13, 1}, {13, 5, 1}};
  return tnnlag::from_drawing(d);
}

tnnlag::PlabicGraph top_cell_2() {
  Drawing d;
  d.m = 4;
  d.boundary = {{2.12, 2.12}, {2.12, -2.12}, {-2.12, -2.12}, {-2.12, 2.12}};
  // 4: B(1,1) 5: W(1,0) 6: B(1,-1) 7: W(-1,1) 8: B(-1,0) 9: W(-1,-1)
  d.interior = {{Color::black, 1, 1},   {Color::white, 1, 0},  {Color::black, 1, -1},
                {Color::white, -1, 1},  {Color::black, -1, 0}, {Color::white, -1, -1}};
  d.edges = {{0, 4}, {4, 5}, {5, 6}, {6, 1}, {3, 7}, {7, 8}, {8, 9}, {9, 2}, {4, 7}, {5, 8}, {6, 9}};
  return tnnlag::from_drawing(d).graph;
}

tnnlag::PlabicGraph top_cell_3() {
  Drawing d;
  d.m = 6;
  d.boundary = {{3, 0}, {0.776, -2.898}, {-0.776, -2.898}, {-3, 0}, {-0.776, 2.898}, {0.776, 2.898}};
  // 6: b(-2,0)  7: w(2,0)  8: b(-.776,0)  9: w(.776,0)  10: b(-.776,-2)  11: w(.776,-2)
  // 12: b(-.776,2)  13: w(.776,2)  14: w(-.776,1)  15: b(.776,1)  16: w(-.776,-1)  17: b(.776,-1)
  const double s = 0.776;
  d.interior = {{Color::black, -2, 0}, {Color::white, 2, 0},  {Color::black, -s, 0},  {Color::white, s, 0},
                {Color::black, -s, -2}, {Color::white, s, -2}, {Color::black, -s, 2},  {Color::white, s, 2},
                {Color::white, -s, 1},  {Color::black, s, 1},  {Color::white, -s, -1}, {Color::black, s, -1}};
  d.edges = {{0, 7},   {7, 15},  {15, 14}, {14, 6},  {6, 3},   {7, 17},  {17, 16}, {16, 6},
             {1, 11},  {11, 17}, {17, 9},  {9, 15},  {15, 13}, {13, 5},  {2, 10},  {10, 16},
             {16, 8},  {8, 14},  {14, 12}, {12, 4},  {12, 13}, {10, 11}, {8, 9}};
  return tnnlag::from_drawing(d).graph;
}

std::vector<std::pair<std::string, std::string>> cell_structure_edges(bool corrected) {
  std::vector<std::pair<std::string, std::string>> out;
  auto add = [&](char hi, char lo, std::vector<std::string> pairs) {
    for (const auto& p : pairs) out.push_back({std::string{hi, p[0]}, std::string{lo, p[1]}});
  };
  add('1', '2', {"AA", "AB", "AC", "AD"});
  add('2', '3', {"AA", "AC", "AD", "BA", "BB", corrected ? "BE" : "AE", "CB", "CC", "CF", "DD", "DE", "DF"});
  add('3', '4', {"AA", "AC", "BA", "BD", "CA", "CB", "DB", "DC", "EC", "ED", "FB", "FD"});
  return out;
}

const std::vector<std::pair<std::string, std::vector<int>>>& cell_structure_labels() {
  static const std::vector<std::pair<std::string, std::vector<int>>> L = {
      {"1A", {3, 4, 5, 6}}, {"2A", {4, 3, 5, 6}}, {"2B", {3, 4, 6, 5}}, {"2C", {2, 4, 5, 7}},
      {"2D", {3, 5, 4, 6}}, {"3A", {4, 3, 6, 5}}, {"3B", {1, 4, 7, 6}}, {"3C", {3, 2, 5, 8}},
      {"3D", {5, 4, 3, 6}}, {"3E", {3, 6, 5, 4}}, {"3F", {2, 5, 4, 7}}};
  return L;
}

bool cell_structure_matches(const tnnlag::CellPoset& P, const std::vector<std::pair<std::string, std::string>>& edges,
                            bool use_labels) {
  std::map<char, std::vector<std::string>> rows;
  for (const auto& [a, b] : edges) {
    rows[a[0]].push_back(a);
    rows[b[0]].push_back(b);
  }
  for (auto& [r, v] : rows) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  }
  std::map<std::string, tnnlag::AffinePerm> fixed;
  for (const auto& [label, w] : cell_structure_labels()) fixed[label] = tnnlag::validate(w, 2, 4);
  const std::set<std::pair<int, int>> target(P.hasse_edges.begin(), P.hasse_edges.end());
  const std::vector<char> order = {'1', '2', '3', '4'};
  const int top = static_cast<int>(order.size()) - 1;
  std::map<std::string, int> assign;

  std::function<bool(std::size_t)> level = [&](std::size_t li) -> bool {
    if (li == order.size()) return edges.size() == target.size();
    const auto& labels = rows[order[li]];
    std::vector<int> pool;
    for (std::size_t v = 0; v < P.nodes.size(); ++v)
      if (P.ranks[v] == top - static_cast<int>(li)) pool.push_back(static_cast<int>(v));
    if (pool.size() != labels.size()) return false;
    do {
      bool ok = true;
      for (std::size_t t = 0; t < labels.size() && ok; ++t) {
        assign[labels[t]] = pool[t];
        auto it = fixed.find(labels[t]);
        if (use_labels && it != fixed.end()) ok = P.nodes[static_cast<std::size_t>(pool[t])] == it->second;
      }
      for (const auto& [a, b] : edges)
        if (ok && b[0] == order[li]) ok = target.count({assign[b], assign[a]}) > 0;
      if (ok && level(li + 1)) return true;
    } while (std::next_permutation(pool.begin(), pool.end()));
    return false;
  };
  return level(0);
}

}  // namespace figures
