#include "tnnlag/necklace.hpp"

#include <algorithm>

#include "tnnlag/error.hpp"

namespace tnnlag {

namespace {

int residue(int v, int m) { return ((v - 1) % m + m) % m + 1; }

IndexSet sorted_residues(std::vector<int> v, int m) {
  for (auto& x : v) x = residue(x, m);
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

std::vector<IndexSet> subsets(int m, int k) {
  std::vector<IndexSet> out;
  if (k < 0 || k > m) return out;
  IndexSet cur(static_cast<std::size_t>(k));
  for (int t = 0; t < k; ++t) cur[static_cast<std::size_t>(t)] = t + 1;
  while (true) {
    out.push_back(cur);
    int t = k - 1;
    while (t >= 0 && cur[static_cast<std::size_t>(t)] == m - k + t + 1) --t;
    if (t < 0) break;
    ++cur[static_cast<std::size_t>(t)];
    for (int u = t + 1; u < k; ++u) cur[static_cast<std::size_t>(u)] = cur[static_cast<std::size_t>(u - 1)] + 1;
  }
  return out;
}

IndexSet complement(const IndexSet& I, int m) {
  IndexSet c;
  for (int x = 1; x <= m; ++x)
    if (!std::binary_search(I.begin(), I.end(), x)) c.push_back(x);
  return c;
}

bool cyclic_leq(const IndexSet& I, const IndexSet& J, int i, int m) {
  if (I.size() != J.size()) throw Error(ErrorKind::ShapeMismatch, "cyclic_leq on sets of different size");
  auto key = [&](int x) { return ((x - i) % m + m) % m; };
  std::vector<int> a, b;
  for (int x : I) a.push_back(key(x));
  for (int x : J) b.push_back(key(x));
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  for (std::size_t t = 0; t < a.size(); ++t)
    if (a[t] > b[t]) return false;
  return true;
}

IndexSet imin(const AffinePerm& f, int i) {
  std::vector<int> v;
  for (int j = i - f.m(); j < i; ++j)
    if (f(j) >= i) v.push_back(f(j));
  return sorted_residues(v, f.m());
}

IndexSet imax(const AffinePerm& f, int i) {
  std::vector<int> v;
  for (int j = i - f.m(); j < i; ++j)
    if (f(j) >= i) v.push_back(j);
  return sorted_residues(v, f.m());
}

GrassmannNecklace necklace_of(const AffinePerm& f) {
  GrassmannNecklace N{f.m(), f.k(), {}, {}};
  for (int i = 1; i <= f.m(); ++i) {
    N.min.push_back(imin(f, i));
    N.max.push_back(imax(f, i));
  }
  return N;
}

namespace {

void check_shape(const std::vector<IndexSet>& entries, int m, int k) {
  if (static_cast<int>(entries.size()) != m)
    throw Error(ErrorKind::InconsistentNecklace, "expected " + std::to_string(m) + " entries");
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto& e = entries[i];
    if (static_cast<int>(e.size()) != k)
      throw Error(ErrorKind::InconsistentNecklace, "entry " + std::to_string(i + 1) + " has wrong size");
    for (std::size_t t = 0; t < e.size(); ++t) {
      if (e[t] < 1 || e[t] > m || (t > 0 && e[t] <= e[t - 1]))
        throw Error(ErrorKind::InconsistentNecklace, "entry " + std::to_string(i + 1) + " is not a sorted subset");
    }
  }
}

// Elements of A not in B.
IndexSet minus(const IndexSet& A, const IndexSet& B) {
  IndexSet d;
  std::set_difference(A.begin(), A.end(), B.begin(), B.end(), std::back_inserter(d));
  return d;
}

AffinePerm finish(const std::vector<int>& w, const GrassmannNecklace& N, bool use_max) {
  AffinePerm f;
  try {
    f = validate(w, N.k, N.m);
  } catch (const Error& e) {
    throw Error(ErrorKind::InconsistentNecklace, e.what());
  }
  GrassmannNecklace back = necklace_of(f);
  if ((use_max ? back.max : back.min) != (use_max ? N.max : N.min))
    throw Error(ErrorKind::InconsistentNecklace, "entries do not come from a bounded affine permutation");
  return f;
}

}  // namespace

AffinePerm f_from_necklace(const GrassmannNecklace& N) {
  const int m = N.m;
  check_shape(N.min, m, N.k);
  std::vector<int> w(static_cast<std::size_t>(m));
  for (int i = 1; i <= m; ++i) {
    const IndexSet& A = N.min[static_cast<std::size_t>(i - 1)];
    const IndexSet& B = N.min[static_cast<std::size_t>(i % m)];
    IndexSet out = minus(A, B), in = minus(B, A);
    if (out.empty() && in.empty()) {
      w[static_cast<std::size_t>(i - 1)] = std::binary_search(A.begin(), A.end(), i) ? i + m : i;
    } else if (out.size() == 1 && in.size() == 1 && out[0] == i) {
      w[static_cast<std::size_t>(i - 1)] = i + ((in[0] - i) % m + m) % m;
    } else {
      throw Error(ErrorKind::InconsistentNecklace, "entries " + std::to_string(i) + " and " +
                                                       std::to_string(i % m + 1) + " differ illegally");
    }
  }
  return finish(w, N, false);
}

AffinePerm f_from_max_necklace(const GrassmannNecklace& N) {
  const int m = N.m;
  check_shape(N.max, m, N.k);
  std::vector<int> w(static_cast<std::size_t>(m), 0);
  for (int i = 1; i <= m; ++i) {
    const IndexSet& A = N.max[static_cast<std::size_t>(i - 1)];
    const IndexSet& B = N.max[static_cast<std::size_t>(i % m)];
    IndexSet out = minus(A, B), in = minus(B, A);
    // A chord j -> i ends just before i+1 and the chord from i starts.
    if (out.empty() && in.empty()) {
      w[static_cast<std::size_t>(i - 1)] = std::binary_search(A.begin(), A.end(), i) ? i + m : i;
    } else if (out.size() == 1 && in.size() == 1 && in[0] == i) {
      int j = out[0];  // f(j) ≡ i, with j < i <= f(j) <= j + m
      int jj = j < i ? j : j - m;
      w[static_cast<std::size_t>(j - 1)] = i + (j - jj);
    } else {
      throw Error(ErrorKind::InconsistentNecklace, "max entries " + std::to_string(i) + " and " +
                                                       std::to_string(i % m + 1) + " differ illegally");
    }
  }
  return finish(w, N, true);
}

bool positroid_member(const AffinePerm& f, const IndexSet& I) {
  if (static_cast<int>(I.size()) != f.k()) throw Error(ErrorKind::ShapeMismatch, "index set size differs from k");
  for (int i = 1; i <= f.m(); ++i)
    if (!cyclic_leq(imin(f, i), I, i, f.m())) return false;
  return true;
}

std::vector<IndexSet> matroid_of(const AffinePerm& f) {
  std::vector<IndexSet> out;
  for (auto& I : subsets(f.m(), f.k()))
    if (positroid_member(f, I)) out.push_back(I);
  return out;
}

nlohmann::json to_json(const GrassmannNecklace& N) {
  return {{"m", N.m}, {"k", N.k}, {"entries_min", N.min}, {"entries_max", N.max}};
}

GrassmannNecklace necklace_from_json(const nlohmann::json& j) {
  try {
    GrassmannNecklace N;
    N.min = j.at("entries_min").get<std::vector<IndexSet>>();
    if (j.contains("entries_max")) N.max = j.at("entries_max").get<std::vector<IndexSet>>();
    N.m = j.contains("m") ? j.at("m").get<int>() : static_cast<int>(N.min.size());
    N.k = j.contains("k") ? j.at("k").get<int>() : (N.min.empty() ? 0 : static_cast<int>(N.min[0].size()));
    return N;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
}

}  // namespace tnnlag
