#pragma once

#include "toda/laurent.hpp"

#include <vector>

namespace toda {

// Generating function F of an integral kernel, Sigma c_t * exp(l_t) with
// integer linear forms l_t over the chain variables.  Encoded as a Laurent
// polynomial: the variable X_i stands for e^{x_i} (likewise Z, W, Y), so each
// polynomial term is one exponential term of F and the coupling variables G,
// G' live in the coefficients' monomials.
using GenFunc = LaurentPoly;

// dF/dv for v the chain variable encoded by `ev` (e.g. Xv(1) for x_1):
// differentiation multiplies each term by its exponent of ev.
LaurentPoly genfunc_grad(const GenFunc& F, VarId ev);

// Second derivative d^2F/dv^2 (each term picks up its squared exponent).
LaurentPoly genfunc_grad2(const GenFunc& F, VarId ev);

// Momenta bindings { p_{x_i} -> +dF/dx_i, p_{z_i} -> -dF/dz_i } for
// i = 1..n, the canonical transformation generated by F.
std::map<VarId, LaurentPoly> momenta_from_genfunc(const GenFunc& F, unsigned n);

// --- kernel catalogue ------------------------------------------------------

// Twisted-chain elementary kernel, rank n, couplings g_1..g_{n+1}:
//   F = g_1 e^{x_1+z_1} + Sum_i e^{x_i-z_i} + Sum_i g_{i+1} e^{z_{i+1}-x_i}
//       + g_{n+1} e^{-x_n-z_n}
GenFunc kernel_twistedA(unsigned n);

// Its g_1 -> 0 limit: the kernel connecting the D_n chain (x side) to the
// C_n chain (z side); couplings relabelled h_i = g_{i+1} when used standalone.
GenFunc kernel_DC(unsigned n);

// General-coupling ("gamma/beta") kernel, couplings g_1..g_n and g'_1..g'_{n-1}:
//   F = Sum_{i<n} (gamma_i e^{x_i-z_i} + beta_i e^{z_{i+1}-x_i})
//       + e^{x_n-z_n} + g_n e^{-x_n-z_n},
//   gamma_i = prod_{k=i}^{n-1} g'_k/g_k,  beta_i = g_i prod_{k=i+1}^{n-1} g_k/g'_k.
GenFunc kernel_gammabeta(unsigned n);

// gamma/beta kernel at g'_1 -> 0 (only gamma_1 vanishes): connects the D_n
// chain to the degenerate C chain whose first z-variable decouples; after
// relabelling z'_i = z_{i+1} this is the rank-dropping C_{n-1} kernel.
GenFunc kernel_CD_drop(unsigned n);

// Rank-dropping kernel in its own variables, unit couplings (§-form used by
// the recursive construction):  F = Sum_{i<=k} (e^{z_i-x_i} + e^{x_{i+1}-z_i})
// + e^{-x_{k+1}-z_k}  on x_1..x_{k+1}, z_1..z_k.
GenFunc kernel_rankdrop(unsigned k);

// Companion kernel of the recursive step, w_1..w_k against z_1..z_k:
//   F = Sum_{i<k} (e^{w_i-z_i} + e^{z_{i+1}-w_i}) + e^{w_k-z_k} + e^{-w_k-z_k}
GenFunc kernel_rankkeep(unsigned k);

// gamma_i / beta_i dressing products as Laurent monomials in G/Gp variables.
LaurentPoly gamma_coeff(unsigned i, unsigned n);
LaurentPoly beta_coeff(unsigned i, unsigned n);

// --- quadratic Hamiltonian potentials -------------------------------------

// Twisted chain, x side:  2 g_1 e^{2x_1} + Sum_i g_{i+1} e^{x_{i+1}-x_i}
//                         + g_n g_{n+1} e^{-x_n-x_{n-1}}
LaurentPoly potential_twistedA_x(unsigned n);

// Twisted chain, z side:  2 g_{n+1} e^{-2z_n} + Sum_i g_{i+1} e^{z_{i+1}-z_i}
//                         + g_1 g_2 e^{z_1+z_2}
LaurentPoly potential_twistedA_z(unsigned n);

// D_n chain over variables of kind `kind` with couplings c_1..c_n:
//   Sum_{i<n} c_i e^{v_{i+1}-v_i} + c_{n-1} c_n e^{-v_n-v_{n-1}}
LaurentPoly potential_D(unsigned n, VarKind kind, const std::vector<LaurentPoly>& c);

// C_n chain:  Sum_{i<n} c_i e^{v_{i+1}-v_i} + 2 c_n e^{-2 v_n}
LaurentPoly potential_C(unsigned n, VarKind kind, const std::vector<LaurentPoly>& c);

// Convenience: coupling symbols g_1..g_n / g'_1..g'_n as polynomials.
std::vector<LaurentPoly> couplings_g(unsigned n);
std::vector<LaurentPoly> couplings_gp(unsigned n);
std::vector<LaurentPoly> couplings_unit(unsigned n);

}  // namespace toda
