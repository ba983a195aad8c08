#pragma once

#include <vector>

#include <json.hpp>

#include "tnnlag/affperm.hpp"

namespace tnnlag {

// Sorted subset of [m], 1-based.
using IndexSet = std::vector<int>;

// All k-subsets of [m] in lexicographic order.
std::vector<IndexSet> subsets(int m, int k);
IndexSet complement(const IndexSet& I, int m);

// Gale order with respect to i < i+1 < ... < i-1.
bool cyclic_leq(const IndexSet& I, const IndexSet& J, int i, int m);

IndexSet imin(const AffinePerm& f, int i);
IndexSet imax(const AffinePerm& f, int i);

struct GrassmannNecklace {
  int m = 0, k = 0;
  std::vector<IndexSet> min;  // min[i-1] = I_min_i
  std::vector<IndexSet> max;  // max[i-1] = I_max_i
  bool operator==(const GrassmannNecklace&) const = default;
};

GrassmannNecklace necklace_of(const AffinePerm& f);
// Uses the I_min entries.
AffinePerm f_from_necklace(const GrassmannNecklace& N);
// Uses the I_max entries: I_max_i minus I_max_{i+1} = {f^{-1}(i) mod m}.
AffinePerm f_from_max_necklace(const GrassmannNecklace& N);

bool positroid_member(const AffinePerm& f, const IndexSet& I);
std::vector<IndexSet> matroid_of(const AffinePerm& f);

nlohmann::json to_json(const GrassmannNecklace& N);
GrassmannNecklace necklace_from_json(const nlohmann::json& j);

}  // namespace tnnlag
