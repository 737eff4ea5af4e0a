#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "toda/laurent.hpp"
#include "toda/rational_expr.hpp"

#include <random>

using namespace toda;

namespace {

std::mt19937 rng(20240817);

GaussianRational random_coeff() {
  std::uniform_int_distribution<int> num(-6, 6);
  std::uniform_int_distribution<int> den(1, 4);
  std::uniform_int_distribution<int> has_im(0, 3);
  GaussianRational c{Rational(num(rng), den(rng))};
  if (has_im(rng) == 0) c.im = Rational(num(rng), den(rng));
  return c;
}

Monomial random_monomial() {
  static const VarId vars[] = {Xv(1), Xv(2), Zv(1), Gv(1), U()};
  std::uniform_int_distribution<int> nvars(0, 3);
  std::uniform_int_distribution<int> which(0, 4);
  std::uniform_int_distribution<int> expo(-3, 3);
  Monomial m;
  int k = nvars(rng);
  for (int i = 0; i < k; ++i) m = m * Monomial::of(vars[which(rng)], expo(rng));
  return m;
}

LaurentPoly random_poly(int max_terms = 5) {
  std::uniform_int_distribution<int> nterms(0, max_terms);
  LaurentPoly p;
  int k = nterms(rng);
  for (int i = 0; i < k; ++i) p.add_term(random_monomial(), random_coeff());
  return p;
}

}  // namespace

TEST_CASE("gaussian rational field axioms") {
  GaussianRational a{Rational(3, 2), Rational(-1, 3)};
  GaussianRational b{Rational(-2), Rational(5, 7)};
  CHECK(a + b - b == a);
  CHECK((a * b) / b == a);
  CHECK(GaussianRational::i() * GaussianRational::i() == GaussianRational(-1));
  CHECK(a.str() == "(3/2-1/3i)");
  CHECK(GaussianRational(Rational(0), Rational(1)).str() == "i");
  CHECK_THROWS_AS(a / GaussianRational(), std::domain_error);
}

TEST_CASE("monomial canonical form and order") {
  Monomial m = Monomial::of(Zv(1), 2) * Monomial::of(Xv(1), -1);
  CHECK(m.exponent(Xv(1)) == -1);
  CHECK(m.exponent(Zv(1)) == 2);
  CHECK(m.exponent(U()) == 0);
  CHECK((m * m.inverse()).is_one());
  CHECK(m.str() == "X1^-1*Z1^2");

  // Multiplication-compatible total order: a<b implies ac<bc.
  for (int trial = 0; trial < 1000; ++trial) {
    Monomial a = random_monomial(), b = random_monomial(), c = random_monomial();
    if (a < b) CHECK(a * c < b * c);
  }
}

TEST_CASE("laurent ring laws (randomized)") {
  for (int trial = 0; trial < 1000; ++trial) {
    LaurentPoly a = random_poly(), b = random_poly(), c = random_poly();
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == LaurentPoly());
    CHECK(a * LaurentPoly(1) == a);
    CHECK((a * LaurentPoly()).is_zero());
  }
}

TEST_CASE("divide_exact inverts multiplication") {
  for (int trial = 0; trial < 500; ++trial) {
    LaurentPoly a = random_poly(), b = random_poly();
    if (b.is_zero()) continue;
    CHECK((a * b).divide_exact(b) == a);
  }
  LaurentPoly x = LaurentPoly::variable(Xv(1));
  CHECK_THROWS_AS((x + LaurentPoly(1)).divide_exact(x + LaurentPoly(2)), std::domain_error);
  CHECK_THROWS_AS(x.divide_exact(LaurentPoly()), std::domain_error);
}

TEST_CASE("pow matches repeated multiplication") {
  for (int trial = 0; trial < 100; ++trial) {
    LaurentPoly a = random_poly(3);
    LaurentPoly acc(1);
    for (unsigned e = 0; e <= 4; ++e) {
      CHECK(a.pow(e) == acc);
      acc = acc * a;
    }
  }
}

TEST_CASE("substitute is a ring homomorphism") {
  std::map<VarId, LaurentPoly> bind{
      {Xv(1), LaurentPoly::variable(Zv(1)) + LaurentPoly(2)},
      {U(), LaurentPoly(GaussianRational(Rational(1, 2)), Monomial::of(Gv(1), -1))},
  };
  for (int trial = 0; trial < 300; ++trial) {
    LaurentPoly a = random_poly(3), b = random_poly(3);
    // X1 appears with negative exponents in random polys; bind only where legal.
    bool a_neg = false, b_neg = false;
    for (const auto& [m, c] : a.terms())
      if (m.exponent(Xv(1)) < 0) a_neg = true;
    for (const auto& [m, c] : b.terms())
      if (m.exponent(Xv(1)) < 0) b_neg = true;
    if (a_neg || b_neg) continue;
    CHECK((a + b).substitute(bind) == a.substitute(bind) + b.substitute(bind));
    CHECK((a * b).substitute(bind) == a.substitute(bind) * b.substitute(bind));
  }
}

TEST_CASE("substitute with negative exponents needs an invertible value") {
  LaurentPoly p(GaussianRational(1), Monomial::of(Xv(1), -2));
  std::map<VarId, LaurentPoly> mono{{Xv(1), LaurentPoly(GaussianRational(3), Monomial::of(Zv(1), 1))}};
  LaurentPoly expect(GaussianRational(Rational(1, 9)), Monomial::of(Zv(1), -2));
  CHECK(p.substitute(mono) == expect);

  std::map<VarId, LaurentPoly> sum{{Xv(1), LaurentPoly::variable(Zv(1)) + LaurentPoly(1)}};
  CHECK_THROWS_WITH_AS(p.substitute(sum), "substitute: requires fraction field", std::domain_error);
}

TEST_CASE("collect splits by exponent and reassembles") {
  for (int trial = 0; trial < 200; ++trial) {
    LaurentPoly a = random_poly();
    auto parts = a.collect(U());
    LaurentPoly back;
    for (const auto& [e, coeff] : parts) {
      for (const auto& [m, c] : coeff.terms()) CHECK(m.exponent(U()) == 0);
      back += coeff * LaurentPoly::variable(U(), e);
    }
    CHECK(back == a);
  }
}

TEST_CASE("canonical serialization") {
  LaurentPoly p;
  p.add_term(Monomial::one(), GaussianRational(-2));
  p.add_term(Monomial::of(Xv(1), 1), GaussianRational(Rational(1, 2)));
  p.add_term(Monomial{{Xv(1), -1}, {Zv(2), 2}}, GaussianRational(Rational(0), Rational(-1)));
  CHECK(p.str() == "-i*X1^-1*Z2^2 - 2 + 1/2*X1");
  CHECK(LaurentPoly().str() == "0");
  CHECK(LaurentPoly(1).str() == "1");
}

TEST_CASE("rational expressions compare by cross-multiplication") {
  LaurentPoly x = LaurentPoly::variable(Xv(1));
  LaurentPoly z = LaurentPoly::variable(Zv(1));
  RationalExpr a(x * x - z * z, x - z);
  RationalExpr b(x + z);
  CHECK(a == b);
  CHECK(a - b == RationalExpr());
  CHECK(a * RationalExpr(x - z, x + z) == RationalExpr(x - z));
  CHECK(a != RationalExpr(x));
  CHECK_THROWS_AS(RationalExpr(x, LaurentPoly()), std::domain_error);
  CHECK_THROWS_AS(a / RationalExpr(), std::domain_error);

  // Monomial denominators fold away (units of the Laurent ring).
  RationalExpr m(x + z, LaurentPoly(GaussianRational(2), Monomial::of(Xv(1), 3)));
  CHECK(m.den() == LaurentPoly(1));
}

TEST_CASE("rational expression field laws (randomized)") {
  for (int trial = 0; trial < 200; ++trial) {
    LaurentPoly pa = random_poly(3), pb = random_poly(3), pc = random_poly(3);
    if (pc.is_zero()) pc = LaurentPoly(1);
    RationalExpr a(pa), b(pb, pc), c(pc);
    CHECK(a + b == b + a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a + b) - b == a);
    if (!b.is_zero()) CHECK((a * b) / b == a);
  }
}
