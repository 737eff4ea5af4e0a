#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "toda/quad.hpp"

#include <boost/math/special_functions/bessel.hpp>

#include <cmath>
#include <random>

using namespace toda::quad;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("gaussian integral") {
  ContourSpec c;
  c.tol = 1e-13;
  auto r = integrate_contour_1d([](cplx t) { return std::exp(-t * t); }, c);
  CHECK(r.converged);
  CHECK(std::abs(r.value - std::sqrt(kPi)) < 1e-12);
}

TEST_CASE("cosh integral matches the Bessel oracle") {
  ContourSpec c;
  c.tol = 1e-13;
  auto r = integrate_contour_1d([](cplx t) { return std::exp(-2.0 * std::cosh(t.real())); }, c);
  double k0 = boost::math::cyl_bessel_k(0, 2.0);
  CHECK(std::abs(0.5 * r.value.real() - k0) < 1e-12);
  CHECK(std::abs(bessel_K_imag_order(0.0, 2.0) - k0) < 1e-12);
}

TEST_CASE("shifted contour reproduces the imaginary-order Bessel value") {
  // Int over Im x = pi of e^{2 i nu x} exp{e^{-x} + e^{x}} dx
  //   = 2 e^{-2 pi nu} K_{2 i nu}(2)
  double nu = 0.5;
  ContourSpec c;
  c.offset_pi = 1.0;
  c.tol = 1e-12;
  auto r = integrate_contour_1d(
      [&](cplx x) { return std::exp(2.0 * cplx(0, 1) * nu * x + std::exp(-x) + std::exp(x)); }, c);
  double expect = 2.0 * std::exp(-2.0 * kPi * nu) * bessel_K_imag_order(2.0 * nu, 2.0);
  CHECK(std::abs(r.value - expect) < 1e-8 * std::abs(expect) + 1e-14);
}

TEST_CASE("admissibility checker") {
  // the A1 integrand: e^{-x} and e^{x+2y} at y=0
  std::vector<ExpMono> terms = {{cplx(1, 0), {-1.0}}, {cplx(1, 0), {1.0}}};
  CHECK_FALSE(contours_admissible(terms, {0.0}));  // grows doubly exponentially
  CHECK(contours_admissible(terms, {1.0}));        // Im x = pi flips both signs
  // a term missing decay in one direction
  std::vector<ExpMono> oneside = {{cplx(-1, 0), {1.0}}};
  CHECK_FALSE(contours_admissible(oneside, {0.0}));
}

TEST_CASE("nested integration") {
  std::vector<ContourSpec> cs(2);
  cs[0].tol = cs[1].tol = 1e-12;
  auto sep = [](const std::vector<cplx>& v) { return std::exp(-v[0] * v[0] - v[1] * v[1]); };
  auto r = integrate_nested(sep, cs);
  CHECK(std::abs(r.value - kPi) < 1e-10);
  // coupled quadratic form s^2 + s t + t^2: integral = pi / sqrt(3/4)
  auto coupled = [](const std::vector<cplx>& v) {
    return std::exp(-v[0] * v[0] - v[0] * v[1] - v[1] * v[1]);
  };
  r = integrate_nested(coupled, cs);
  CHECK(std::abs(r.value - 2.0 * kPi / std::sqrt(3.0)) < 1e-9);
}

TEST_CASE("bessel_K_imag_order basic properties") {
  CHECK(bessel_K_imag_order(1.0, 2.0) == bessel_K_imag_order(-1.0, 2.0));
  double prev = bessel_K_imag_order(1.0, 1.0);
  for (double x : {2.0, 4.0, 8.0}) {
    double cur = bessel_K_imag_order(1.0, x);
    CHECK(cur < prev);
    CHECK(cur > 0.0);
    prev = cur;
  }
  CHECK_THROWS_AS(bessel_K_imag_order(1.0, -1.0), std::domain_error);
}

TEST_CASE("complex gamma") {
  CHECK(std::abs(complex_gamma(cplx(1, 0)) - 1.0) < 1e-13);
  CHECK(std::abs(complex_gamma(cplx(5, 0)) - 24.0) < 24.0 * 1e-13);
  CHECK(std::abs(complex_gamma(cplx(0.5, 0)) - std::sqrt(kPi)) < 1e-13);
  double lam = 0.35;
  cplx g = complex_gamma(cplx(0, 2 * lam));
  double expect = kPi / (2 * lam * std::sinh(2 * kPi * lam));
  CHECK(std::abs(std::norm(g) - expect) < 1e-12 * expect);
  CHECK_THROWS_AS(complex_gamma(cplx(-3, 0)), std::domain_error);
  // reflection consistency off the axis
  cplx s(-2.3, 1.7);
  cplx lhs = complex_gamma(s) * complex_gamma(1.0 - s);
  cplx rhs = kPi / std::sin(kPi * s);
  CHECK(std::abs(lhs - rhs) < 1e-11 * std::abs(rhs));
}

TEST_CASE("error estimates are honest") {
  std::mt19937 rng(20240817);
  std::uniform_real_distribution<double> da(0.5, 3.0), db(-2.0, 2.0);
  int ok = 0;
  for (int trial = 0; trial < 100; ++trial) {
    double a = da(rng), b = db(rng);
    ContourSpec c;
    c.tol = 1e-11;
    auto r = integrate_contour_1d([&](cplx t) { return std::exp(-a * t * t + b * t); }, c);
    double truth = std::sqrt(kPi / a) * std::exp(b * b / (4 * a));
    if (std::abs(r.value - truth) <= 3.0 * r.abs_error + 1e-13 * truth) ++ok;
  }
  CHECK(ok >= 99);
}
