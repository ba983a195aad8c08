#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "tnnlag/affperm.hpp"
#include "tnnlag/measure.hpp"
#include "tnnlag/necklace.hpp"

namespace tnnlag {

// (B^R(n, 2n), <=_R) graded by symmdim.
struct CellPoset {
  int n = 0;
  std::vector<AffinePerm> nodes;
  std::vector<int> ranks;
  std::vector<std::pair<int, int>> hasse_edges;  // (lower, upper) node indices

  int index_of(const AffinePerm& f) const;  // -1 when absent
  std::vector<int> rank_counts() const;     // bottom-up
  std::vector<int> lower_covers(int v) const;
  std::vector<int> upper_covers(int v) const;
};

// SizeGuard for n > 4.  Throws std::logic_error if the cover relation of the order
// disagrees with the rank-filtration edges or with the ambient covers.
CellPoset build_poset(int n);
// Length of the longest chain from a minimal node, per node.
std::vector<int> longest_chain_from_bottom(const CellPoset& P);

struct ClosureWitness {
  bool comparable = false;
  // Realizing path when comparable: each step is a symmetric bridge or a fixed pair insertion.
  std::vector<std::string> steps;
  std::vector<Plucker> sequence;  // points of the larger cell, approaching `limit`
  Plucker limit;                  // a point of the smaller cell
  std::vector<Rational> distances;
  // When incomparable: an index set in matroid_of(f) absent from matroid_of(g).
  IndexSet separating;
};
// Degenerate points of Π^R_g with eps = 2^-1, ..., 2^-samples onto a point of Π^R_f.
ClosureWitness find_closure_witness(const AffinePerm& f, const AffinePerm& g, int samples, std::uint64_t seed = 1);
// closure_witness accepts when the second half of the distances strictly decreases and the
// last step shrinks by at least 3/4.
bool closure_witness(const AffinePerm& f, const AffinePerm& g, int samples);

std::string poset_dot(const CellPoset& P);
nlohmann::json to_json(const CellPoset& P);

}  // namespace tnnlag
