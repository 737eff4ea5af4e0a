#include "toda/genfunc.hpp"

namespace toda {

LaurentPoly genfunc_grad(const GenFunc& F, VarId ev) {
  LaurentPoly out;
  for (const auto& [m, c] : F.terms()) {
    std::int32_t e = m.exponent(ev);
    if (e != 0) out.add_term(m, c * GaussianRational(e));
  }
  return out;
}

LaurentPoly genfunc_grad2(const GenFunc& F, VarId ev) {
  LaurentPoly out;
  for (const auto& [m, c] : F.terms()) {
    std::int32_t e = m.exponent(ev);
    if (e != 0) out.add_term(m, c * GaussianRational(static_cast<long>(e) * e));
  }
  return out;
}

std::map<VarId, LaurentPoly> momenta_from_genfunc(const GenFunc& F, unsigned n) {
  std::map<VarId, LaurentPoly> bind;
  for (unsigned i = 1; i <= n; ++i) {
    bind[Pxv(i)] = genfunc_grad(F, Xv(i));
    bind[Pzv(i)] = -genfunc_grad(F, Zv(i));
  }
  return bind;
}

namespace {
Monomial expo(VarId a, int ea, VarId b, int eb) { return Monomial{{a, ea}, {b, eb}}; }
}  // namespace

GenFunc kernel_twistedA(unsigned n) {
  GenFunc F;
  F.add_term(expo(Xv(1), 1, Zv(1), 1) * Monomial::of(Gv(1)), GaussianRational(1));
  for (unsigned i = 1; i <= n; ++i) F.add_term(expo(Xv(i), 1, Zv(i), -1), GaussianRational(1));
  for (unsigned i = 1; i < n; ++i)
    F.add_term(expo(Zv(i + 1), 1, Xv(i), -1) * Monomial::of(Gv(i + 1)), GaussianRational(1));
  F.add_term(expo(Xv(n), -1, Zv(n), -1) * Monomial::of(Gv(n + 1)), GaussianRational(1));
  return F;
}

GenFunc kernel_DC(unsigned n) {
  return kernel_twistedA(n).substitute({{Gv(1), LaurentPoly()}});
}

LaurentPoly gamma_coeff(unsigned i, unsigned n) {
  Monomial m;
  for (unsigned k = i; k < n; ++k) m = m * Monomial::of(Gpv(k)) * Monomial::of(Gv(k), -1);
  return LaurentPoly(GaussianRational(1), m);
}

LaurentPoly beta_coeff(unsigned i, unsigned n) {
  Monomial m = Monomial::of(Gv(i));
  for (unsigned k = i + 1; k < n; ++k) m = m * Monomial::of(Gv(k)) * Monomial::of(Gpv(k), -1);
  return LaurentPoly(GaussianRational(1), m);
}

GenFunc kernel_gammabeta(unsigned n) {
  GenFunc F;
  for (unsigned i = 1; i < n; ++i) {
    F += gamma_coeff(i, n) * LaurentPoly(GaussianRational(1), expo(Xv(i), 1, Zv(i), -1));
    F += beta_coeff(i, n) * LaurentPoly(GaussianRational(1), expo(Zv(i + 1), 1, Xv(i), -1));
  }
  F.add_term(expo(Xv(n), 1, Zv(n), -1), GaussianRational(1));
  F.add_term(expo(Xv(n), -1, Zv(n), -1) * Monomial::of(Gv(n)), GaussianRational(1));
  return F;
}

GenFunc kernel_CD_drop(unsigned n) {
  // g'_1 -> 0 kills exactly the gamma_1 term (the only coefficient containing
  // Gp(1)); every other dressing is Gp(1)-free.
  GenFunc F;
  for (unsigned i = 1; i < n; ++i) {
    if (i > 1)
      F += gamma_coeff(i, n) * LaurentPoly(GaussianRational(1), expo(Xv(i), 1, Zv(i), -1));
    F += beta_coeff(i, n) * LaurentPoly(GaussianRational(1), expo(Zv(i + 1), 1, Xv(i), -1));
  }
  F.add_term(expo(Xv(n), 1, Zv(n), -1), GaussianRational(1));
  F.add_term(expo(Xv(n), -1, Zv(n), -1) * Monomial::of(Gv(n)), GaussianRational(1));
  return F;
}

GenFunc kernel_rankdrop(unsigned k) {
  GenFunc F;
  for (unsigned i = 1; i <= k; ++i) {
    F.add_term(expo(Zv(i), 1, Xv(i), -1), GaussianRational(1));
    F.add_term(expo(Xv(i + 1), 1, Zv(i), -1), GaussianRational(1));
  }
  F.add_term(expo(Xv(k + 1), -1, Zv(k), -1), GaussianRational(1));
  return F;
}

GenFunc kernel_rankkeep(unsigned k) {
  GenFunc F;
  for (unsigned i = 1; i < k; ++i) {
    F.add_term(expo(Wv(i), 1, Zv(i), -1), GaussianRational(1));
    F.add_term(expo(Zv(i + 1), 1, Wv(i), -1), GaussianRational(1));
  }
  F.add_term(expo(Wv(k), 1, Zv(k), -1), GaussianRational(1));
  F.add_term(expo(Wv(k), -1, Zv(k), -1), GaussianRational(1));
  return F;
}

LaurentPoly potential_twistedA_x(unsigned n) {
  LaurentPoly V;
  V.add_term(Monomial{{Gv(1), 1}, {Xv(1), 2}}, GaussianRational(2));
  for (unsigned i = 1; i < n; ++i)
    V.add_term(expo(Xv(i + 1), 1, Xv(i), -1) * Monomial::of(Gv(i + 1)), GaussianRational(1));
  V.add_term(expo(Xv(n), -1, Xv(n - 1), -1) * Monomial::of(Gv(n)) * Monomial::of(Gv(n + 1)),
             GaussianRational(1));
  return V;
}

LaurentPoly potential_twistedA_z(unsigned n) {
  LaurentPoly V;
  V.add_term(expo(Zv(1), 1, Zv(2), 1) * Monomial::of(Gv(1)) * Monomial::of(Gv(2)),
             GaussianRational(1));
  for (unsigned i = 1; i < n; ++i)
    V.add_term(expo(Zv(i + 1), 1, Zv(i), -1) * Monomial::of(Gv(i + 1)), GaussianRational(1));
  V.add_term(Monomial{{Gv(n + 1), 1}, {Zv(n), -2}}, GaussianRational(2));
  return V;
}

LaurentPoly potential_D(unsigned n, VarKind kind, const std::vector<LaurentPoly>& c) {
  LaurentPoly V;
  for (unsigned i = 1; i < n; ++i)
    V += c[i] * LaurentPoly(GaussianRational(1), expo(var(kind, i + 1), 1, var(kind, i), -1));
  V += c[n - 1] * c[n] *
       LaurentPoly(GaussianRational(1), expo(var(kind, n), -1, var(kind, n - 1), -1));
  return V;
}

LaurentPoly potential_C(unsigned n, VarKind kind, const std::vector<LaurentPoly>& c) {
  LaurentPoly V;
  for (unsigned i = 1; i < n; ++i)
    V += c[i] * LaurentPoly(GaussianRational(1), expo(var(kind, i + 1), 1, var(kind, i), -1));
  V += c[n] * LaurentPoly(GaussianRational(2), Monomial::of(var(kind, n), -2));
  return V;
}

std::vector<LaurentPoly> couplings_g(unsigned n) {
  std::vector<LaurentPoly> c(n + 1);
  for (unsigned i = 1; i <= n; ++i) c[i] = LaurentPoly::variable(Gv(i));
  return c;
}

std::vector<LaurentPoly> couplings_gp(unsigned n) {
  std::vector<LaurentPoly> c(n + 1);
  for (unsigned i = 1; i <= n; ++i) c[i] = LaurentPoly::variable(Gpv(i));
  return c;
}

std::vector<LaurentPoly> couplings_unit(unsigned n) {
  std::vector<LaurentPoly> c(n + 1);
  for (unsigned i = 1; i <= n; ++i) c[i] = LaurentPoly(1);
  return c;
}

}  // namespace toda
