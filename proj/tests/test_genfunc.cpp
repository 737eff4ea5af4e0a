#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "toda/genfunc.hpp"

using namespace toda;

namespace {
LaurentPoly term(long c, std::initializer_list<Monomial::Entry> es) {
  return LaurentPoly(GaussianRational(c), Monomial(es));
}
}  // namespace

TEST_CASE("gradients of the twisted kernel") {
  GenFunc F = kernel_twistedA(2);
  // dF/dz1 = g1 e^{x1+z1} - e^{x1-z1}
  LaurentPoly expect = term(1, {{Gv(1), 1}, {Xv(1), 1}, {Zv(1), 1}}) - term(1, {{Xv(1), 1}, {Zv(1), -1}});
  CHECK(genfunc_grad(F, Zv(1)) == expect);
  // dF/dx1 = g1 e^{x1+z1} + e^{x1-z1} - g2 e^{z2-x1}
  expect = term(1, {{Gv(1), 1}, {Xv(1), 1}, {Zv(1), 1}}) + term(1, {{Xv(1), 1}, {Zv(1), -1}}) -
           term(1, {{Gv(2), 1}, {Zv(2), 1}, {Xv(1), -1}});
  CHECK(genfunc_grad(F, Xv(1)) == expect);
  // second derivative just squares the exponents
  CHECK(genfunc_grad2(F, Xv(1)) == genfunc_grad(genfunc_grad(F, Xv(1)), Xv(1)));
}

TEST_CASE("momenta binding signs") {
  GenFunc F = kernel_DC(2);
  auto mom = momenta_from_genfunc(F, 2);
  // p_{z1} = -dF/dz1 = +e^{x1-z1}
  CHECK(mom.at(Pzv(1)) == term(1, {{Xv(1), 1}, {Zv(1), -1}}));
  CHECK(mom.at(Pxv(1)) == genfunc_grad(F, Xv(1)));
  CHECK(mom.at(Pzv(2)) == -genfunc_grad(F, Zv(2)));
}

TEST_CASE("kernel degenerations and dressing products") {
  for (unsigned n = 2; n <= 4; ++n) {
    CHECK(kernel_twistedA(n).substitute({{Gv(1), LaurentPoly()}}) == kernel_DC(n));
    for (unsigned i = 1; i < n; ++i) {
      // gamma_i * beta_i = g'_i
      CHECK(gamma_coeff(i, n) * beta_coeff(i, n) == LaurentPoly::variable(Gpv(i)));
    }
  }
}

TEST_CASE("rank-dropping kernel is the degenerate general kernel relabelled") {
  for (unsigned n = 2; n <= 4; ++n) {
    std::map<VarId, LaurentPoly> relabel;
    for (unsigned i = 2; i <= n; ++i) relabel[Zv(i)] = LaurentPoly::variable(Zv(i - 1));
    for (unsigned i = 1; i <= n; ++i) {
      relabel[Gv(i)] = LaurentPoly(1);
      relabel[Gpv(i)] = LaurentPoly(1);
    }
    CHECK(kernel_CD_drop(n).substitute(relabel) == kernel_rankdrop(n - 1));
  }
}

TEST_CASE("potential shapes") {
  // D_2: c1 e^{x2-x1} + c1 c2 e^{-x2-x1}
  LaurentPoly v = potential_D(2, VarKind::X, couplings_unit(2));
  LaurentPoly expect = term(1, {{Xv(2), 1}, {Xv(1), -1}}) + term(1, {{Xv(2), -1}, {Xv(1), -1}});
  CHECK(v == expect);
  // C_2: c1 e^{z2-z1} + 2 c2 e^{-2 z2}
  v = potential_C(2, VarKind::Z, couplings_g(2));
  expect = LaurentPoly(GaussianRational(1), Monomial({{Gv(1), 1}, {Zv(2), 1}, {Zv(1), -1}})) +
           LaurentPoly(GaussianRational(2), Monomial({{Gv(2), 1}, {Zv(2), -2}}));
  CHECK(v == expect);
  // twisted x potential at n=2: 2 g1 e^{2x1} + g2 e^{x2-x1} + g2 g3 e^{-x2-x1}
  v = potential_twistedA_x(2);
  expect = LaurentPoly(GaussianRational(2), Monomial({{Gv(1), 1}, {Xv(1), 2}})) +
           LaurentPoly(GaussianRational(1), Monomial({{Gv(2), 1}, {Xv(2), 1}, {Xv(1), -1}})) +
           LaurentPoly(GaussianRational(1), Monomial({{Gv(2), 1}, {Gv(3), 1}, {Xv(2), -1}, {Xv(1), -1}}));
  CHECK(v == expect);
}
