#pragma once

#include "toda/genfunc.hpp"
#include "toda/matrix.hpp"
#include "toda/report.hpp"

#include <optional>
#include <string>
#include <vector>

namespace toda {

enum class Family { TwistedA, C, D };

// Coupling frame of an elementary intertwining kernel
//   F = head e^{x_1+z_1} + Sum a_i e^{x_i-z_i} + Sum d_i e^{z_{i+1}-x_i}
//       + tail e^{-x_n-z_n};
// the R/R* factor matrices and both Lax forms are built from these.
struct ElemCoeffs {
  unsigned n = 0;
  LaurentPoly head, tail;
  std::vector<LaurentPoly> a;  // index 1..n
  std::vector<LaurentPoly> d;  // index 1..n-1
};

ElemCoeffs elem_twistedA(unsigned n);   // head=g1, a_i=1, d_i=g_{i+1}, tail=g_{n+1}
ElemCoeffs elem_gammabeta(unsigned n);  // head=0, a_i=gamma_i (a_n=1), d_i=beta_i, tail=g_n
ElemCoeffs elem_DC(unsigned n);         // twistedA at g1=0
ElemCoeffs elem_CD_drop(unsigned n);    // gammabeta at g'_1=0 (gamma_1=0)

// 2n x 2n factor matrices of the Lax operator, generalizing the printed
// rank-4 example; L(x,p_x) = R R* and L(z,p_z) = R* R.
PolyMatrix build_R(const ElemCoeffs& k);
PolyMatrix build_Rstar(const ElemCoeffs& k);

// Lax matrices in symbolic momentum variables (Px_i / Pz_i on the diagonal).
// x-form: diag (p_{x_n},...,p_{x_1},-p_{x_1},...,-p_{x_n}); z-form mirrored.
PolyMatrix build_Lx(const ElemCoeffs& k);
PolyMatrix build_Lz(const ElemCoeffs& k);

// Published single-family entry points.
struct LaxSpec {
  Family family;
  unsigned rank;
  std::vector<LaurentPoly> couplings;  // index 1..(rank or rank+1)
};
PolyMatrix build_L(const LaxSpec& spec);

// Theorem-2 intertwiners (both polynomial in u):
//   M = u * R*(twistedA)|_{g1=0}   with  M Lx = Lz M  at the D_n/C_n point,
//   N = u * R*(gammabeta)|_{g'1=0} with  N Lx = Lz N  at the rank-dropping
//       point (the first z-variable of the C side decouples).
PolyMatrix build_M(unsigned n);
PolyMatrix build_N(unsigned n);

// L(x,p_x) = R R* and L(z,p_z) = R* R with momenta bound from the twisted
// kernel; also the corollary R L(z) = L(x) R.
IdentityReport verify_factorization(unsigned n, const std::map<VarId, LaurentPoly>& coupling_values = {},
                                    std::optional<Mutation> mutate = std::nullopt);

// det(L(x,p_x)-lambda) == det(L(z,p_z)-lambda) exactly.
IdentityReport verify_det_identity(unsigned n, std::optional<Mutation> mutate = std::nullopt);

// Theorem 2: M- and N-intertwining residuals, exact.
IdentityReport verify_MN_intertwining(unsigned n, std::optional<Mutation> mutate = std::nullopt);

// Kernel degeneration chain: twistedA at g1=0 equals the D/C kernel;
// gammabeta at g'_1=0 equals the rank-dropping kernel after relabelling
// z'_i = z_{i+1} and coupling specialization; plus the gamma/beta product law.
IdentityReport coupling_limit_kernels(unsigned n);

// Coefficients of det(L - lambda) by lambda power; for TwistedA the u and
// 1/u parts are returned separately (hamiltonians[k] is u-free).
struct CharHamiltonians {
  std::map<std::int32_t, LaurentPoly> by_lambda_power;  // u-free part
  LaurentPoly u_part, u_inv_part;                       // coefficients of u, 1/u
};
CharHamiltonians char_hamiltonians(const PolyMatrix& L);

// Quadratic Hamiltonian from the characteristic polynomial:
// H2 = 1/2 * (lambda^{2n-2} coefficient with p -> i p).
LaurentPoly quadratic_hamiltonian(const PolyMatrix& L, unsigned n);

}  // namespace toda
