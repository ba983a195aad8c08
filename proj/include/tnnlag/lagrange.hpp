#pragma once

#include "tnnlag/matrix.hpp"
#include "tnnlag/measure.hpp"
#include "tnnlag/necklace.hpp"

namespace tnnlag {

// R(x, y) = x R y^T = sum_i (-1)^(i-1) (x_i y_{n+i} - x_{n+i} y_i).
Matrix form_matrix(int n);

// i -> i + n mod 2n on index sets.
IndexSet rot_index(const IndexSet& I, int n);
// T(I) = rot(I^C).
IndexSet index_involution(const IndexSet& I, int n);

bool is_isotropic(const GrassmannPoint& X);
bool is_tnn(const GrassmannPoint& X);
bool is_in_lgrnn(const GrassmannPoint& X);
// Plücker symmetry Δ_I = Δ_{T(I)}.
bool has_plucker_symmetry(const GrassmannPoint& X);

GrassmannPoint rot_point(const GrassmannPoint& X);
GrassmannPoint alt_point(const GrassmannPoint& X);
// Orthogonal complement for the standard dot product.
GrassmannPoint perp_point(const GrassmannPoint& X);
GrassmannPoint swap_point(const GrassmannPoint& X);
GrassmannPoint big_t_point(const GrassmannPoint& X);
bool is_rho_symmetric_point(const GrassmannPoint& X);

// rowspan(I | M') with M'_{ij} = (-1)^(n-i) M_{n+1-i, j}.
GrassmannPoint sigma(const Matrix& M);
// FirstMinorZero when Δ_{[n]} vanishes.
Matrix sigma_inverse(const GrassmannPoint& X);
bool is_antidiagonal_symmetric(const Matrix& M);
// All minors of all orders; SizeGuard above 6x6.
bool matrix_is_tnn(const Matrix& M);

// Left cyclic shift on row vectors: x S = (x_2, ..., x_2n, (-1)^(n-1) x_1).
Matrix shift_matrix(int n);
bool cyclic_shift_identity(int n);

struct FlowCheck {
  bool positive = false;    // every Δ_I of X exp(t(S + S^T)) has the same strict sign
  bool symmetric = false;   // Δ_I and Δ_{T(I)} intervals overlap for all I
  int bits = 0;             // precision that settled the verdict
  bool ok() const { return positive && symmetric; }
};
// Certified by rational interval arithmetic, doubling precision from 64 up to 4096 bits.
// t = 0 returns the exact TNN/Lagrangian verdict for X itself.
FlowCheck positivity_flow(const GrassmannPoint& X, const Rational& t);
bool positivity_flow_check(const GrassmannPoint& X, const Rational& t);

}  // namespace tnnlag
