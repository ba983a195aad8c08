#pragma once

#include <cstdint>
#include <vector>

#include <json.hpp>

#include "tnnlag/affperm.hpp"
#include "tnnlag/matrix.hpp"
#include "tnnlag/necklace.hpp"
#include "tnnlag/plabic.hpp"
#include "tnnlag/quadratic.hpp"

namespace tnnlag {

// Plücker vector indexed by the k-subsets of [m] in lexicographic order.
struct Plucker {
  int k = 0, m = 0;
  std::vector<IndexSet> sets;
  std::vector<Rational> val;

  // Δ_∅ (the empty sentinel) and out-of-range sets read as 0.
  Rational operator[](const IndexSet& I) const;
  bool operator==(const Plucker& o) const { return k == o.k && m == o.m && val == o.val; }
  bool nonnegative() const;
};

// Divides by the lexicographically first nonzero coordinate (the zero vector stays zero).
Plucker normalized(Plucker p);
Plucker raw_plucker(const Matrix& M);
// Normalized; RankDeficient unless M has full row rank.
Plucker plucker_of_matrix(const Matrix& M);

class GrassmannPoint {
 public:
  GrassmannPoint() = default;
  explicit GrassmannPoint(Matrix M);  // RankDeficient unless full row rank
  int k() const { return static_cast<int>(M_.rows()); }
  int m() const { return static_cast<int>(M_.cols()); }
  const Matrix& matrix() const { return M_; }
  const Plucker& plucker() const { return P_; }
  // Same subspace.
  bool operator==(const GrassmannPoint& o) const { return P_ == o.P_; }

 private:
  Matrix M_;
  Plucker P_;
};

// Row space with prescribed Plücker coordinates; RankDeficient if they are all zero,
// ShapeMismatch if they violate the Plücker relations.
GrassmannPoint point_from_plucker(const Plucker& p);

IndexSet mu(const IndexSet& I, int i, int m);
IndexSet nu(const IndexSet& I, int i, int m);

// Elementary factors acting on columns; the wrap factors at i = m carry (-1)^(k-1).
Matrix x_matrix(int m, int k, int i, const Rational& a);
Matrix y_matrix(int m, int k, int i, const Rational& b);

GrassmannPoint add_bridge_point(const GrassmannPoint& X, int i, const Rational& a, Color at_i = Color::white);
GrassmannPoint add_sym_bridge_point(const GrassmannPoint& X, int i, const Rational& a);
GrassmannPoint add_lollipop_point(const GrassmannPoint& X, int i, Color c);
GrassmannPoint add_sym_lollipop_point(const GrassmannPoint& X, int i);
GrassmannPoint coordinate_point(int m, const IndexSet& white);

AffinePerm f_of_point(const GrassmannPoint& X);

// The signless partition function over almost perfect matchings.
GrassmannPoint boundary_measurement(const PlabicNetwork& N);
Plucker measurement_plucker(const PlabicNetwork& N);

GrassmannPoint point_from_steps(const std::vector<ConstructionStep>& steps, const std::vector<Rational>& weights);
GrassmannPoint point_from_decomposition(const BridgeDecomposition& d, const std::vector<Rational>& weights);

// Single bridge deletion: g = f * s_i > f, J = I_min_{i+1}(g), c = Δ_J / Δ_{μ_i J}.
struct BridgeRemoval {
  Rational c;
  GrassmannPoint X;
};
BridgeRemoval remove_bridge(const GrassmannPoint& Y, int i, const AffinePerm& f);

struct SymBridgeRemoval {
  QuadraticNumber c;
  bool rational;
  // Filled when c is rational.
  GrassmannPoint X;
  // β_i(Y, -c) over Q(√d), row-major, always filled.
  std::vector<std::vector<QuadraticNumber>> matrix;
  AffinePerm f_of_result;
};
// P(a) = Δ_J - a(Δ_{μ_i J} + Δ_{ν_{i+n} J}) + a^2 Δ_{μ_i ν_{i+n} J} at J = I_min_{i+1}(β_i f).
std::vector<Rational> removal_polynomial(const GrassmannPoint& Y, int i, const AffinePerm& f);
SymBridgeRemoval remove_sym_bridge(const GrassmannPoint& Y, int i, const AffinePerm& f);

std::vector<Rational> random_weights(std::uint64_t seed, int count);
GrassmannPoint random_point(const AffinePerm& f, std::uint64_t seed);
GrassmannPoint random_sym_point(const AffinePerm& f, std::uint64_t seed);

nlohmann::json to_json(const GrassmannPoint& X);
GrassmannPoint point_from_json(const nlohmann::json& j);
nlohmann::json to_json(const Plucker& p);

}  // namespace tnnlag
