#include <doctest.h>

#include <algorithm>
#include <optional>
#include <random>

#include "figures.hpp"
#include "oracles.hpp"
#include "tnnlag/error.hpp"
#include "tnnlag/lagrange.hpp"
#include "tnnlag/measure.hpp"
#include "tnnlag/necklace.hpp"
#include "tnnlag/plabic.hpp"

using namespace tnnlag;
using oracle::q;

namespace {

AffinePerm P(std::vector<int> w) {
  const int m = static_cast<int>(w.size());
  int s = 0;
  for (int i = 0; i < m; ++i) s += w[static_cast<std::size_t>(i)] - (i + 1);
  return validate(w, s / m, m);
}

int bridge_count(const BridgeDecomposition& d) {
  return static_cast<int>(std::count_if(d.steps.begin(), d.steps.end(),
                                        [](const auto& s) { return s.kind == BridgeDecomposition::Step::bridge; }));
}

GrassmannPoint example_point() {
  return GrassmannPoint(Matrix::from_ints({{2, 0, 0, -3, 0, 6}, {0, 2, 2, 6, 0, -9}, {0, 0, 0, 0, 1, 1}}));
}

bool has_boundary_edge(const PlabicGraph& G) {
  for (int i = 1; i <= G.m(); ++i) {
    int h = G.leg(i);
    if (h >= 0 && G.is_boundary(G.target(h))) return true;
  }
  return false;
}

// Oracle Plücker vector of a network, normalized like the library's.
std::vector<Rational> oracle_plucker(const PlabicNetwork& N, int k) {
  auto sums = oracle::matching_sums(N);
  std::vector<Rational> v;
  for (const auto& I : oracle::ksubsets(N.graph.m(), k)) v.push_back(sums.count(I) ? sums[I] : Rational(0));
  Rational lead = 0;
  for (const auto& x : v)
    if (x != 0) {
      lead = x;
      break;
    }
  for (auto& x : v) x /= lead;
  return v;
}

std::vector<Rational> oracle_plucker(const Matrix& M) {
  std::vector<Rational> v;
  for (const auto& [I, x] : oracle::minors(M)) v.push_back(x);
  Rational lead = 0;
  for (const auto& x : v)
    if (x != 0) {
      lead = x;
      break;
    }
  for (auto& x : v) x /= lead;
  return v;
}

Matrix product_sym(const Matrix& X, int i, const Rational& a) {
  const int m = static_cast<int>(X.cols()), k = static_cast<int>(X.rows()), n = m / 2;
  int j = (i + n - 1) % m + 1;
  return X * x_matrix(m, k, i, a) * y_matrix(m, k, j, a);
}

PlabicNetwork with_bridge(const PlabicNetwork& N, int i, const Rational& a) {
  BridgeResult R = add_bridge(N.graph, i, Color::white);
  PlabicNetwork out{R.graph, N.weight};
  out.weight.resize(static_cast<std::size_t>(R.graph.edge_slots()), Rational(1));
  out.weight[static_cast<std::size_t>(R.edge)] = a;
  return out;
}

}  // namespace

TEST_SUITE("measure") {
  TEST_CASE("Plücker coordinates of the 2 x 4 example") {
    Plucker p = plucker_of_matrix(Matrix::from_ints({{1, 1, 3, 2}, {0, 1, 4, 5}}));
    std::vector<Rational> expect = {1, 4, 5, 1, 3, 7};
    CHECK(p.val == expect);
    CHECK(p.sets == oracle::ksubsets(4, 2));
    CHECK(p[{2, 4}] == 3);
    CHECK(p[{}] == 0);
  }

  TEST_CASE("identity block and normalization") {
    Matrix M(2, 5);
    M(0, 0) = 1;
    M(1, 1) = 1;
    Plucker p = plucker_of_matrix(M);
    for (std::size_t t = 0; t < p.sets.size(); ++t) CHECK(p.val[t] == (p.sets[t] == IndexSet{1, 2} ? 1 : 0));
    Plucker raw = raw_plucker(M.scaled(3));
    CHECK(raw[{1, 2}] == 9);
    CHECK(normalized(raw) == p);
    CHECK_THROWS_AS(plucker_of_matrix(Matrix::from_ints({{1, 2}, {2, 4}})), Error);
  }

  TEST_CASE("Plücker vectors agree with Leibniz minors") {
    std::mt19937_64 rng(1);
    for (int t = 0; t < 40; ++t) {
      std::size_t k = 1 + rng() % 3, m = k + 1 + rng() % 3;
      Matrix M = oracle::random_matrix(rng, k, m);
      if (oracle::rank_of([&] {
            std::vector<std::vector<Rational>> r(k, std::vector<Rational>(m));
            for (std::size_t a = 0; a < k; ++a)
              for (std::size_t b = 0; b < m; ++b) r[a][b] = M(a, b);
            return r;
          }()) < static_cast<int>(k))
        continue;
      CHECK(plucker_of_matrix(M).val == oracle_plucker(M));
      GrassmannPoint X(M);
      CHECK(point_from_plucker(X.plucker()) == X);
    }
  }

  TEST_CASE("point from Plücker rejects invalid vectors") {
    Plucker p = plucker_of_matrix(Matrix::from_ints({{1, 1, 3, 2}, {0, 1, 4, 5}}));
    Plucker bad = p;
    bad.val[1] += 1;
    CHECK_THROWS_AS(point_from_plucker(bad), Error);
    Plucker zero = p;
    std::fill(zero.val.begin(), zero.val.end(), Rational(0));
    CHECK_THROWS_AS(point_from_plucker(zero), Error);
  }

  TEST_CASE("mu and nu") {
    CHECK(mu({2, 4}, 1, 4) == IndexSet{1, 4});
    CHECK(mu({1, 2}, 1, 4).empty());
    CHECK(nu({1, 3}, 1, 4) == IndexSet{2, 3});
    CHECK(mu({1, 3}, 4, 4) == IndexSet{3, 4});
  }

  TEST_CASE("coordinate points and lollipop networks") {
    GrassmannPoint X = coordinate_point(5, {2, 4});
    CHECK(X.plucker()[{2, 4}] == 1);
    CHECK(f_of_point(X) == P({1, 7, 3, 9, 5}));
    PlabicNetwork N{lollipop_graph(P({1, 7, 3, 9, 5})), {1, 1, 1, 1, 1}};
    CHECK(boundary_measurement(N) == X);
    CHECK(random_point(P({1, 7, 3, 9, 5}), 4) == X);
  }

  TEST_CASE("measurement matches the edge-subset matching oracle") {
    std::vector<std::pair<PlabicNetwork, int>> nets = {{figures::two_graphs_left(), 3},
                                                       {figures::two_graphs_right(), 3}};
    for (int m = 2; m <= 5; ++m)
      for (int k = 1; k < m; ++k)
        for (const auto& f : enumerate(k, m, false)) {
          auto d = bridge_decomposition(f);
          nets.push_back({decomposition_network(d, random_weights(2, bridge_count(d))), k});
        }
    for (int n = 1; n <= 2; ++n)
      for (const auto& f : enumerate(n, 2 * n, true)) {
        Construction C = bridge_construction(f);
        nets.push_back({replay_network(C.steps, random_weights(3, bridge_step_count(C.steps))), n});
      }
    int compared = 0;
    for (const auto& [N, k] : nets) {
      if (has_boundary_edge(N.graph)) continue;
      CHECK(normalized(measurement_plucker(N)).val == oracle_plucker(N, k));
      ++compared;
    }
    CHECK(compared > 150);
  }

  TEST_CASE("right two-graphs network measures the example point") {
    CHECK(boundary_measurement(figures::two_graphs_right()) == example_point());
  }

  TEST_CASE("left two-graphs network as printed") {
    PlabicNetwork L = figures::two_graphs_left();
    GrassmannPoint Y = boundary_measurement(L);
    // Neither the oracle nor the library reproduces the example point with the printed weights.
    GrassmannPoint printed(Matrix::from_rows(
        {{1, 0, 0, -3, 0, 6}, {0, 1, 1, 3, 0, q(-9, 2)}, {0, 0, 0, 0, 1, 1}}));
    CHECK(oracle_plucker(L, 3) == oracle_plucker(printed.matrix()));
    CHECK(Y == printed);
    CHECK_FALSE(Y == example_point());
    CHECK_FALSE(is_isotropic(Y));
    CHECK(f_of_point(Y) == P({4, 3, 6, 7, 8, 11}));
    // Weight 2 on the leg at boundary 1 gives the example point.
    L.weight[0] = 2;
    CHECK(boundary_measurement(L) == example_point());
  }

  TEST_CASE("f_X agrees with the span oracle") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 60; ++t) {
      std::size_t k = 1 + rng() % 3, m = k + 1 + rng() % 4;
      Matrix M = oracle::random_matrix(rng, k, m, -1, 1);
      try {
        GrassmannPoint X(M);
        CHECK(f_of_point(X).window() == oracle::f_window(M));
      } catch (const Error&) {
      }
    }
    CHECK(f_of_point(example_point()) == P({4, 3, 6, 7, 8, 11}));
    CHECK(is_rho_symmetric(f_of_point(example_point())));
  }

  TEST_CASE("random points land in their cells") {
    for (const auto& f : enumerate(2, 4, false)) {
      GrassmannPoint X = random_point(f, 1);
      CHECK(f_of_point(X) == f);
      CHECK(f_of_point(X).window() == oracle::f_window(X.matrix()));
      CHECK(X.plucker().nonnegative());
    }
    auto b36 = enumerate(3, 6, false);
    std::mt19937_64 rng(8);
    for (int t = 0; t < 50; ++t) {
      const AffinePerm& f = b36[rng() % b36.size()];
      CHECK(f_of_point(random_point(f, rng())) == f);
    }
    for (const auto& f : enumerate(2, 4, true))
      for (std::uint64_t s = 1; s <= 5; ++s) {
        GrassmannPoint X = random_sym_point(f, s);
        CHECK(f_of_point(X) == f);
        CHECK(is_rho_symmetric_point(X));
      }
    CHECK(random_point(P({3, 5, 4, 6}), 2) == random_point(P({3, 5, 4, 6}), 2));
  }

  TEST_CASE("single bridge minor update") {
    std::mt19937_64 rng(21);
    for (int t = 0; t < 50; ++t) {
      int k = 1 + static_cast<int>(rng() % 3), m = k + 1 + static_cast<int>(rng() % 3);
      auto cells = enumerate(k, m, false);
      GrassmannPoint X = random_point(cells[rng() % cells.size()], rng());
      int i = 1 + static_cast<int>(rng() % static_cast<unsigned>(m));
      Rational a = oracle::random_positive(rng);
      Matrix Y = X.matrix() * x_matrix(m, k, i, a);
      for (const auto& I : oracle::ksubsets(m, k)) {
        IndexSet J = mu(I, i, m);
        Rational expect = oracle::minor(X.matrix(), I) + (J.empty() ? Rational(0) : a * oracle::minor(X.matrix(), J));
        CHECK(oracle::minor(Y, I) == expect);
      }
      CHECK(add_bridge_point(X, i, a) == GrassmannPoint(Y));
    }
  }

  TEST_CASE("symmetric bridge minor update") {
    std::mt19937_64 rng(22);
    for (int t = 0; t < 50; ++t) {
      int n = 1 + static_cast<int>(rng() % 3), m = 2 * n;
      auto cells = enumerate(n, m, false);
      GrassmannPoint X = random_point(cells[rng() % cells.size()], rng());
      int i = 1 + static_cast<int>(rng() % static_cast<unsigned>(m));
      int j = (i + n - 1) % m + 1;
      Rational a = oracle::q(static_cast<long>(rng() % 11) - 5, 1 + static_cast<long>(rng() % 3));
      Matrix Y = product_sym(X.matrix(), i, a);
      auto D = [&](const IndexSet& I) { return I.empty() ? Rational(0) : oracle::minor(X.matrix(), I); };
      for (const auto& I : oracle::ksubsets(m, n)) {
        IndexSet mi = mu(I, i, m), nj = nu(I, j, m);
        IndexSet both = mi.empty() ? IndexSet{} : nu(mi, j, m);
        CHECK(oracle::minor(Y, I) == D(I) + a * D(mi) + a * D(nj) + a * a * D(both));
      }
      CHECK(add_sym_bridge_point(X, i, a) == GrassmannPoint(Y));
    }
    GrassmannPoint X = random_point(shift_perm(2, 4), 1);
    CHECK(add_sym_bridge_point(X, 2, 0) == X);
  }

  TEST_CASE("symmetric bridges raise the cell by beta") {
    for (int n = 2; n <= 3; ++n)
      for (const auto& f : enumerate(n, 2 * n, true))
        for (int i = 1; i <= 2 * n; ++i) {
          GrassmannPoint X = random_sym_point(f, 3);
          GrassmannPoint Y = add_sym_bridge_point(X, i, q(5, 3));
          CHECK(f_of_point(Y) == beta(f, i));
          CHECK(is_rho_symmetric_point(Y));
        }
  }

  TEST_CASE("matrix route equals matching route, wrap bridges included") {
    int wraps = 0;
    for (int m = 2; m <= 5; ++m)
      for (int k = 1; k < m; ++k)
        for (const auto& f : enumerate(k, m, false)) {
          auto d = bridge_decomposition(f);
          auto w = random_weights(6, bridge_count(d));
          PlabicNetwork N = decomposition_network(d, w);
          GrassmannPoint X = point_from_decomposition(d, w);
          CHECK(boundary_measurement(N) == X);
          for (int i : {m, 1}) {
            if (N.graph.leg(i) < 0 || N.graph.leg(i % m + 1) < 0) continue;
            PlabicNetwork B = with_bridge(N, i, q(7, 2));
            CHECK(boundary_measurement(B) == add_bridge_point(X, i, q(7, 2)));
            wraps += i == m;
          }
        }
    CHECK(wraps > 50);
  }

  TEST_CASE("construction steps: point route equals network route") {
    for (int n = 1; n <= 3; ++n)
      for (const auto& f : enumerate(n, 2 * n, true)) {
        Construction C = bridge_construction(f);
        auto w = random_weights(11, bridge_step_count(C.steps));
        GrassmannPoint X = point_from_steps(C.steps, w);
        CHECK(boundary_measurement(replay_network(C.steps, w)) == X);
        CHECK(is_in_lgrnn(X));
      }
    Construction Z = bridge_construction(P({1, 2, 7, 8}));
    CHECK(point_from_steps(Z.steps, {}) == coordinate_point(4, {3, 4}));
    CHECK_THROWS_AS(point_from_steps(Z.steps, {1}), Error);
  }

  TEST_CASE("one symmetric bridge for n = 1") {
    Construction C = bridge_construction(P({2, 3}));
    REQUIRE(bridge_step_count(C.steps) == 1);
    Rational a = q(3, 2);
    GrassmannPoint X = point_from_steps(C.steps, {a});
    // The two bridges merge into one of weight 2a.
    CHECK(X.plucker()[{1}] == 1);
    CHECK(X.plucker()[{2}] == 2 * a);
    CHECK(boundary_measurement(replay_network(C.steps, {a})) == X);
  }

  TEST_CASE("single bridge removal round trip") {
    int trips = 0;
    for (int m = 2; m <= 5; ++m)
      for (int k = 1; k < m; ++k)
        for (const auto& f : enumerate(k, m, false))
          for (int i = 1; i <= m; ++i) {
            AffinePerm g = right_mul_s(f, i);
            if (!g.is_bounded() || dim(g) != dim(f) + 1) continue;
            GrassmannPoint X = random_point(f, 9);
            Rational a = q(5, 4);
            BridgeRemoval r = remove_bridge(add_bridge_point(X, i, a), i, f);
            CHECK(r.c == a);
            CHECK(r.X == X);
            ++trips;
          }
    CHECK(trips > 100);
  }

  TEST_CASE("symmetric bridge removal") {
    std::mt19937_64 rng(31);
    std::vector<std::pair<AffinePerm, int>> pairs;
    for (int n = 2; n <= 3; ++n)
      for (const auto& f : enumerate(n, 2 * n, true))
        for (int i = 1; i <= 2 * n; ++i) {
          AffinePerm g = beta(f, i);
          if (g != f && symmdim(g) == symmdim(f) + 1) pairs.push_back({f, i});
        }
    REQUIRE(pairs.size() >= 50);
    std::shuffle(pairs.begin(), pairs.end(), rng);
    pairs.resize(50);
    for (const auto& [f, i] : pairs) {
      GrassmannPoint X = random_sym_point(f, rng());
      Rational a = oracle::random_positive(rng);
      GrassmannPoint Y = add_sym_bridge_point(X, i, a);
      SymBridgeRemoval r = remove_sym_bridge(Y, i, f);
      REQUIRE(r.rational);
      CHECK(r.c == QuadraticNumber(a));
      CHECK(r.X == X);
      CHECK(r.f_of_result == f);

      auto P2 = removal_polynomial(Y, i, f);
      REQUIRE(P2.size() == 3);
      CHECK(P2[0] + P2[1] * a + P2[2] * a * a == 0);
      // The other root is not in (0, a).
      if (P2[2] != 0) {
        Rational other = P2[0] / (P2[2] * a);
        CHECK_FALSE((other > 0 && other < a));
      }
      // Half way back stays in the big cell; twice as far leaves the nonnegative part.
      GrassmannPoint half = add_sym_bridge_point(Y, i, -a / 2);
      CHECK(f_of_point(half) == beta(f, i));
      CHECK(half.plucker().nonnegative());
      CHECK_FALSE(add_sym_bridge_point(Y, i, -2 * a).plucker().nonnegative());
    }
  }

  TEST_CASE("removal errors") {
    auto kind_of = [](auto&& fn) -> std::optional<ErrorKind> {
      try {
        fn();
      } catch (const Error& e) {
        return e.kind();
      }
      return std::nullopt;
    };
    AffinePerm top = shift_perm(2, 4);
    GrassmannPoint Y = random_sym_point(top, 1);
    CHECK(kind_of([&] { remove_sym_bridge(Y, 1, top); }) == ErrorKind::NotInCell);
    CHECK(kind_of([&] { remove_bridge(Y, 1, top); }) == ErrorKind::NotInCell);
    // Δ_J vanishes on points of the lower cell itself.
    int vanishing = 0;
    for (const auto& f : enumerate(2, 4, true))
      for (int i = 1; i <= 4; ++i) {
        AffinePerm g = beta(f, i);
        if (g == f) continue;
        GrassmannPoint X = random_sym_point(f, 4);
        if (X.plucker()[imin(g, i % 4 + 1)] != 0) continue;
        CHECK(kind_of([&] { remove_sym_bridge(X, i, f); }) == ErrorKind::NotInCell);
        ++vanishing;
      }
    CHECK(vanishing > 0);
  }

  TEST_CASE("JSON round trips") {
    for (const auto& f : enumerate(3, 6, true)) {
      GrassmannPoint X = random_sym_point(f, 2);
      CHECK(point_from_json(to_json(X)) == X);
      nlohmann::json j = to_json(X.plucker());
      CHECK(j["coordinates"].size() == 20);
    }
    CHECK_THROWS_AS(point_from_json(nlohmann::json{{"k", 1}, {"m", 2}, {"rows", {{"1", "x"}}}}), Error);
  }
}
