#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace tnnlag {

// Affine permutation of Z with period m, stored by its window f(1..m).
// The window need not be bounded; validate() builds the bounded ones.
class AffinePerm {
 public:
  AffinePerm() = default;
  AffinePerm(int m, std::vector<int> window);

  int m() const { return m_; }
  // Type k = sum(f(i) - i) / m.  Only meaningful when m divides the sum.
  int k() const;
  const std::vector<int>& window() const { return w_; }
  int operator()(int i) const;
  int inverse(int v) const;
  bool is_bounded() const;

  auto operator<=>(const AffinePerm&) const = default;
  bool operator==(const AffinePerm&) const = default;

  std::string str() const;

 private:
  int m_ = 0;
  std::vector<int> w_;
};

AffinePerm validate(const std::vector<int>& window, int k, int m);
AffinePerm identity_perm(int m);
// The shift i -> i + k, the top element of B(k, m).
AffinePerm shift_perm(int k, int m);

enum class RelationKind { alignment, crossing };

struct Relation {
  int i;
  int j;
  RelationKind kind;
  bool simple;
  bool operator==(const Relation&) const = default;
};

std::vector<Relation> relations(const AffinePerm& f);
// Inversions (i, j) in [m] x Z with i < j and f(i) > f(j).
int length(const AffinePerm& f);
int dim(const AffinePerm& f);

AffinePerm right_mul_s(const AffinePerm& f, int i);
AffinePerm left_mul_s(const AffinePerm& f, int i);
// f * (i j) for positions i < j, i not congruent to j.
AffinePerm right_mul_transposition(const AffinePerm& f, int i, int j);
bool is_fsi_greater(const AffinePerm& f, int i);

enum class Side { right, left };
AffinePerm star(const AffinePerm& f, int i, Side side);

bool bruhat_leq(const AffinePerm& f, const AffinePerm& g);
// Upper covers g of f, one per simple alignment.
std::vector<AffinePerm> covers(const AffinePerm& f);

bool is_rho_symmetric(const AffinePerm& f);
AffinePerm twist(const AffinePerm& f, int i);
AffinePerm beta(const AffinePerm& f, int i);
// Positions i in [2n] with fs_i < f, f(i) != i and f(i+1) != i+1+2n, i.e. f = beta_i(f ⋊ i).
std::vector<int> beta_descents(const AffinePerm& f);

struct SymmetricLength {
  int orbits;   // symmell
  int central;  // orbits of size one
};
SymmetricLength symmetric_alignments(const AffinePerm& f);
int symmell(const AffinePerm& f);
int symmdim(const AffinePerm& f);
// #{i in [2n] : f(i) = i + n}
int middle_count(const AffinePerm& f);

// λ_i: f in B^R(n-1, 2n-2) to B^R(n, 2n) with new fixed points f(i) = i, f(i±n) = i±n+2n.
AffinePerm add_fixed_pair(const AffinePerm& f, int i);
// Inverse of add_fixed_pair: i must satisfy f(i) = i.
AffinePerm remove_fixed_pair(const AffinePerm& f, int i);

struct GoingDown {
  enum Kind { fixed_pair, predecessor } kind;
  int i;
  std::optional<AffinePerm> pred;
};
GoingDown going_down(const AffinePerm& f);

std::vector<AffinePerm> enumerate(int k, int m, bool rho_symmetric_only);

nlohmann::json to_json(const AffinePerm& f);
AffinePerm perm_from_json(const nlohmann::json& j);

}  // namespace tnnlag
