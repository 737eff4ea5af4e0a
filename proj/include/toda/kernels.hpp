#pragma once

#include "toda/genfunc.hpp"
#include "toda/rational_expr.hpp"
#include "toda/report.hpp"

#include <optional>

namespace toda {

// Two-level intertwining check for a kernel exp(F) between quadratic
// Hamiltonians H = -1/2 hbar^2 Laplacian + V on each side:
//   hbar^0 (Hamilton-Jacobi):  1/2 Sum_i (dF/dx_i)^2 - V_x
//                            = 1/2 Sum_i (dF/dz_i)^2 - V_z
//   hbar^1 (Laplacian):        Sum_i d2F/dx_i^2 = Sum_i d2F/dz_i^2
// (potentials are subtracted on both sides; this is the convention under
// which every kernel in the catalogue closes exactly).
struct H2Report {
  bool pass = false;
  LaurentPoly hj_residual;
  LaurentPoly laplacian_residual;
};
H2Report verify_h2_intertwining(const GenFunc& F, const LaurentPoly& Vx, const LaurentPoly& Vz,
                                unsigned nx, unsigned nz, VarKind x_kind = VarKind::X);

// The four catalogued kernels at rank n with fully symbolic couplings.
IdentityReport verify_h2_suite(unsigned n);

// Recursive rank-lowering kernel (lambda-dependent):
//   K = exp(i lam (Sum x + Sum w - 2 Sum z)) * S^{2 i lam} * exp(F1 + F2),
//   S = e^{-x_{k+1}} + e^{-w_k},
// with F1 the rank-dropping kernel (x_1..x_{k+1} vs z_1..z_k) and F2 the
// rank-keeping kernel (w_1..w_k vs z_1..z_k), unit couplings.  Verifies the
// integrand identity
//   H^{D_{k+1}}(x) K - (H^{D_k}(w) - 1/2 (i lam)^2) K = Sum_i d/dz_i (g_i K)
// with the explicit total-derivative counterterm g_i = 1/2 d(F2-F1)/dz_i;
// the residual is a rational expression over powers of S and must vanish
// identically (all powers of lam at once, by cross-multiplication).
IdentityReport verify_recursive_intertwining(unsigned k,
                                             std::optional<Mutation> mutate = std::nullopt);

// Structural descriptor of the Baxter operator as a double kernel
// Q(x;z) Q(y;z): the two constituent generating functions and the coupling
// map tying them; commutation follows from the two one-sided H2 reports.
struct BaxterDescriptor {
  GenFunc first, second;
  std::string coupling_map;
  std::string derivation_note;
};
BaxterDescriptor compose_baxter(unsigned n);

}  // namespace toda
