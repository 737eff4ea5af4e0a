#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "toda/matrix.hpp"

#include <random>

using namespace toda;

namespace {

std::mt19937 rng(987654);

LaurentPoly random_entry() {
  static const VarId vars[] = {Xv(1), Zv(1), U(), Gv(1)};
  std::uniform_int_distribution<int> nterms(0, 2);
  std::uniform_int_distribution<int> which(0, 3);
  std::uniform_int_distribution<int> expo(-2, 2);
  std::uniform_int_distribution<int> coeff(-4, 4);
  LaurentPoly p;
  int k = nterms(rng);
  for (int i = 0; i < k; ++i) {
    Monomial m = Monomial::of(vars[which(rng)], expo(rng)) * Monomial::of(vars[which(rng)], expo(rng));
    p.add_term(m, GaussianRational(coeff(rng)));
  }
  return p;
}

PolyMatrix random_matrix(std::size_t n) {
  PolyMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m.at(r, c) = random_entry();
  return m;
}

}  // namespace

TEST_CASE("matrix algebra basics") {
  PolyMatrix a = random_matrix(3), b = random_matrix(3), c = random_matrix(3);
  CHECK((a * b) * c == a * (b * c));
  CHECK(a * (b + c) == a * b + a * c);
  CHECK(a * PolyMatrix::identity(3) == a);
  CHECK(PolyMatrix::identity(3) * a == a);
  CHECK((a - a).is_zero());
}

TEST_CASE("bareiss determinant matches cofactor oracle") {
  for (std::size_t n = 1; n <= 5; ++n)
    for (int trial = 0; trial < 40; ++trial) {
      PolyMatrix m = random_matrix(n);
      CHECK(determinant(m) == determinant_cofactor(m));
    }
}

TEST_CASE("determinant is multiplicative") {
  for (int trial = 0; trial < 20; ++trial) {
    PolyMatrix a = random_matrix(4), b = random_matrix(4);
    CHECK(determinant(a * b) == determinant(a) * determinant(b));
  }
}

TEST_CASE("determinant handles zero pivots") {
  // Anti-diagonal matrix: every leading pivot is zero until swapped.
  PolyMatrix m(4, 4);
  for (std::size_t i = 0; i < 4; ++i) m.at(i, 3 - i) = LaurentPoly(static_cast<long>(i + 1));
  CHECK(determinant(m) == LaurentPoly(24));  // two swaps, sign +

  PolyMatrix singular(4, 4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) singular.at(i, j) = LaurentPoly::variable(Xv(1));
  CHECK(determinant(singular).is_zero());
}

TEST_CASE("char_poly of a diagonal matrix") {
  PolyMatrix m(2, 2);
  m.at(0, 0) = LaurentPoly::variable(Xv(1));
  m.at(1, 1) = LaurentPoly::variable(Zv(1));
  LaurentPoly lam = LaurentPoly::variable(Lam());
  LaurentPoly expect = (m.at(0, 0) - lam) * (m.at(1, 1) - lam);
  CHECK(char_poly(m, Lam()) == expect);
}

TEST_CASE("substitute maps entries") {
  PolyMatrix m(1, 2);
  m.at(0, 0) = LaurentPoly::variable(Xv(1), 2);
  m.at(0, 1) = LaurentPoly::variable(U(), -1);
  auto s = m.substitute({{Xv(1), LaurentPoly(3)}, {U(), LaurentPoly(GaussianRational(2))}});
  CHECK(s.at(0, 0) == LaurentPoly(9));
  CHECK(s.at(0, 1) == LaurentPoly(GaussianRational(Rational(1, 2))));
}
