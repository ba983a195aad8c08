#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "tnnlag/error.hpp"
#include "tnnlag/measure.hpp"
#include "tnnlag/necklace.hpp"

using namespace tnnlag;

namespace {

// Position of j in the cyclic order i < i+1 < ... < i-1.
int cyc(int j, int i, int m) { return ((j - i) % m + m) % m; }

// Lexicographically first (or last) nonzero minor in the cyclic order starting at i.
IndexSet extreme_nonzero(const GrassmannPoint& X, int i, bool first) {
  const int m = X.m();
  auto mins = oracle::minors(X.matrix());
  std::vector<int> best;
  IndexSet arg;
  for (const auto& [I, v] : mins) {
    if (v == 0) continue;
    std::vector<int> key;
    for (int j : I) key.push_back(cyc(j, i, m));
    std::sort(key.begin(), key.end());
    if (arg.empty() || (first ? key < best : key > best)) {
      best = key;
      arg = I;
    }
  }
  return arg;
}

}  // namespace

TEST_SUITE("necklace") {
  TEST_CASE("cyclic Gale order") {
    CHECK(cyclic_leq({1, 2}, {1, 3}, 1, 4));
    CHECK_FALSE(cyclic_leq({2}, {1}, 1, 2));
    CHECK(cyclic_leq({1}, {2}, 1, 2));
    CHECK(cyclic_leq({2}, {1}, 2, 2));
    CHECK(cyclic_leq({3, 4}, {1, 2}, 3, 4));
  }

  TEST_CASE("necklace examples") {
    // Every minor of a top-cell point is nonzero, so I_min_1 is the initial segment.
    CHECK(imin(shift_perm(2, 4), 1) == IndexSet{1, 2});
    CHECK(imin(shift_perm(2, 4), 3) == IndexSet{3, 4});
    AffinePerm f = validate({2, 3}, 1, 2);
    CHECK(imin(f, 1) == IndexSet{1});
    CHECK(imin(f, 2) == IndexSet{2});
  }

  TEST_CASE("necklace entries are the extreme nonzero minors of a sampled point") {
    for (int m = 2; m <= 5; ++m)
      for (int k = 1; k < m; ++k)
        for (const auto& f : enumerate(k, m, false)) {
          GrassmannPoint X = random_point(f, 7);
          for (int i = 1; i <= m; ++i) {
            CHECK(imin(f, i) == extreme_nonzero(X, i, true));
            CHECK(imax(f, i) == extreme_nonzero(X, i, false));
          }
        }
  }

  TEST_CASE("matroid equals the nonzero minors of sampled points") {
    auto check = [](const AffinePerm& f, std::uint64_t seed) {
      GrassmannPoint X = random_point(f, seed);
      std::vector<IndexSet> nz;
      for (const auto& [I, v] : oracle::minors(X.matrix()))
        if (v != 0) nz.push_back(I);
      CHECK(matroid_of(f) == nz);
      for (const auto& I : subsets(f.m(), f.k()))
        CHECK(positroid_member(f, I) == std::binary_search(nz.begin(), nz.end(), I));
    };
    for (const auto& f : enumerate(2, 4, false)) check(f, 3);
    auto b36 = enumerate(3, 6, false);
    std::mt19937_64 rng(11);
    for (int t = 0; t < 20; ++t) check(b36[rng() % b36.size()], rng());
    CHECK(matroid_of(shift_perm(2, 4)).size() == 6);
  }

  TEST_CASE("necklace update under a right descent") {
    for (const auto& f : enumerate(2, 4, false))
      for (int i = 1; i <= 4; ++i) {
        if (!is_fsi_greater(f, i)) continue;
        AffinePerm g = right_mul_s(f, i);
        IndexSet expect = imin(f, i + 1 > 4 ? 1 : i + 1);
        int out = ((f(i) - 1) % 4 + 4) % 4 + 1, in = ((f(i + 1) - 1) % 4 + 4) % 4 + 1;
        REQUIRE(std::find(expect.begin(), expect.end(), out) != expect.end());
        expect.erase(std::find(expect.begin(), expect.end(), out));
        expect.push_back(in);
        std::sort(expect.begin(), expect.end());
        CHECK(imin(g, i + 1 > 4 ? 1 : i + 1) == expect);
      }
  }

  TEST_CASE("necklace round trips") {
    for (int m = 1; m <= 6; ++m)
      for (int k = 0; k <= m; ++k)
        for (const auto& f : enumerate(k, m, false)) {
          GrassmannNecklace N = necklace_of(f);
          CHECK(f_from_necklace(N) == f);
          CHECK(f_from_max_necklace(N) == f);
          CHECK(necklace_of(f_from_necklace(N)) == N);
          CHECK(necklace_from_json(to_json(N)) == N);
        }
  }

  TEST_CASE("constant necklace gives only fixed points") {
    GrassmannNecklace N = necklace_of(validate({5, 6, 3, 4}, 2, 4));
    for (const auto& I : N.min) CHECK(I == IndexSet{1, 2});
    AffinePerm f = f_from_necklace(N);
    CHECK(f.window() == std::vector<int>{5, 6, 3, 4});
  }

  TEST_CASE("malformed necklaces are rejected") {
    GrassmannNecklace N = necklace_of(shift_perm(2, 4));
    N.min[1] = {1};
    CHECK_THROWS_AS(f_from_necklace(N), Error);
    try {
      f_from_necklace(N);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::InconsistentNecklace);
    }
  }

  TEST_CASE("complements and subsets") {
    CHECK(subsets(4, 2).size() == 6);
    CHECK(subsets(6, 3) == oracle::ksubsets(6, 3));
    CHECK(complement({1, 3}, 4) == IndexSet{2, 4});
  }
}
