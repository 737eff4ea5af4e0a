#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <vector>

namespace toda::quad {

using cplx = std::complex<double>;

// One exponential term  c * exp(Sum_j s_j v_j)  of an integrand's exponent;
// used by the admissibility checker to validate contour offsets before any
// evaluation happens.
struct ExpMono {
  cplx coeff;
  std::vector<double> slopes;  // one slope per integration variable
};

// Horizontal contour Im v = offset_pi * pi for one integration variable.
struct ContourSpec {
  double offset_pi = 0.0;   // imaginary offset as a multiple of pi
  double tol = 1e-10;       // target absolute tolerance
  double max_half_width = 60.0;
  std::size_t max_nodes = 1u << 21;
  // When fixed_nodes > 0 the rule is frozen: plain trapezoid with exactly
  // fixed_nodes nodes on [-half_width, half_width], no adaptation.  Used by
  // finite-difference stencils so neighbouring samples share one rule and
  // the quadrature error stays a smooth function of the outer parameters.
  double half_width = 0.0;
  std::size_t fixed_nodes = 0;
};

struct QuadResult {
  cplx value{0.0, 0.0};
  double abs_error = 0.0;
  std::size_t nodes = 0;
  bool converged = false;
};

struct QuadFailure : std::runtime_error {
  QuadResult last;
  explicit QuadFailure(const std::string& what, QuadResult r)
      : std::runtime_error(what), last(r) {}
};

// True when, with every variable shifted by its offset, each exponential
// term has non-positive real coefficient (no growth anywhere) and every
// real direction of every variable sees at least one strictly decaying term.
bool contours_admissible(const std::vector<ExpMono>& terms, const std::vector<double>& offsets_pi);

// Integral of f over the horizontal line Im v = c.offset_pi * pi.  The
// integrand is sampled at v = t + i pi c.offset_pi for real t; the real
// window grows until the endpoint magnitudes are negligible, then the
// trapezoid rule is refined by node doubling until two successive estimates
// agree within tolerance (spectral accuracy for analytic decaying
// integrands).  Throws QuadFailure on budget exhaustion.
QuadResult integrate_contour_1d(const std::function<cplx(cplx)>& f, const ContourSpec& c);

// Nested application of the 1d rule, contours[0] outermost; inner tolerances
// are tightened by 4x per level and error estimates propagate additively.
QuadResult integrate_nested(const std::function<cplx(const std::vector<cplx>&)>& f,
                            const std::vector<ContourSpec>& contours);

// K_{i mu}(x) = Int_0^inf exp(-x cosh t) cos(mu t) dt, real for real mu, x>0.
double bessel_K_imag_order(double mu, double x);

// Gamma function on the complex plane (Lanczos rational approximation with
// the reflection formula for Re s < 1/2).  Poles rejected.
cplx complex_gamma(cplx s);

}  // namespace toda::quad
