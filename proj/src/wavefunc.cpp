#include "toda/wavefunc.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace toda::wave {

namespace {

constexpr double kPi = 3.14159265358979323846;
const cplx kI{0.0, 1.0};

double to_double(const Rational& r) { return r.convert_to<double>(); }
cplx to_cplx(const GaussianRational& c) { return {to_double(c.re), to_double(c.im)}; }

double now_seconds() {
  using clock = std::chrono::steady_clock;
  static const clock::time_point t0 = clock::now();
  return std::chrono::duration<double>(clock::now() - t0).count();
}

// exponential-term list of a generating function restricted to the
// integration variables (for the admissibility checker)
std::vector<quad::ExpMono> exp_terms(const LaurentPoly& F, const std::vector<VarId>& vars,
                                     const std::map<VarId, cplx>& fixed) {
  std::vector<quad::ExpMono> out;
  for (const auto& [m, c] : F.terms()) {
    quad::ExpMono t;
    cplx fixed_part = 0.0;
    t.slopes.assign(vars.size(), 0.0);
    for (const auto& [v, e] : m.entries()) {
      auto it = std::find(vars.begin(), vars.end(), v);
      if (it != vars.end()) {
        t.slopes[static_cast<std::size_t>(it - vars.begin())] = static_cast<double>(e);
      } else {
        fixed_part += static_cast<double>(e) * fixed.at(v);
      }
    }
    t.coeff = to_cplx(c) * std::exp(fixed_part);
    out.push_back(std::move(t));
  }
  return out;
}

}  // namespace

cplx eval_exp_poly(const LaurentPoly& F, const std::map<VarId, cplx>& position) {
  cplx sum = 0.0;
  for (const auto& [m, c] : F.terms()) {
    cplx e = 0.0;
    for (const auto& [v, ex] : m.entries()) e += static_cast<double>(ex) * position.at(v);
    sum += to_cplx(c) * std::exp(e);
  }
  return sum;
}

// --- A1 -------------------------------------------------------------------

cplx chi_a1(double nu, double y, double tol) {
  if (std::abs(nu) > 5.0 || std::abs(y) > 3.0)
    throw std::domain_error("chi_a1: outside validated range |nu|<=5, |y|<=3");
  // admissibility: the raw integrand grows on the real line, Im x = pi works
  std::vector<quad::ExpMono> terms = {{cplx(1.0, 0.0), {-1.0}},
                                      {cplx(std::exp(2.0 * y), 0.0), {1.0}}};
  if (!quad::contours_admissible(terms, {1.0}))
    throw std::domain_error("chi_a1: contour Im x = pi rejected by admissibility checker");
  quad::ContourSpec c;
  c.offset_pi = 1.0;
  c.tol = tol;
  quad::QuadResult r = quad::integrate_contour_1d(
      [&](cplx x) {
        return std::exp(2.0 * kI * nu * (x + y) + std::exp(-x) + std::exp(x + 2.0 * y));
      },
      c);
  return -(std::exp(2.0 * kPi * nu) / 2.0) * r.value;
}

ChiReport chi_a1_report(double nu, double y, double tol) {
  ChiReport rep;
  rep.chi = chi_a1(nu, y, tol);
  rep.bessel = quad::bessel_K_imag_order(2.0 * nu, 2.0 * std::exp(y));
  rep.ratio = rep.chi / rep.bessel;
  return rep;
}

// --- D2, 2-variable form --------------------------------------------------

namespace {

// integrand of Eq-style 2-variable representation at x11 = x (real line),
// z11 = z (line Im z = pi); the Gamma(2 i l2) prefactor is applied by the
// caller
struct D2TwoD {
  double l1, l2, x21, x22;

  cplx operator()(double x, cplx z) const {
    cplx phase = kI * (l2 * (x22 + x21) + (l2 + l1) * x) - 2.0 * kI * l2 * z;
    double base = std::exp(-x22) + std::exp(-x);
    cplx power = std::exp(2.0 * kI * l2 * std::log(base));
    cplx expo = std::exp(z - x21) + std::exp(x22 - z) + std::exp(-x22 - z) + std::exp(x - z) +
                std::exp(-x - z);
    return std::exp(phase + expo) * power;
  }
};

void check_d2_contours(double x21, double x22) {
  // exponential terms of the 2-variable integrand in (x11, z11)
  std::vector<quad::ExpMono> terms = {
      {cplx(std::exp(-x21), 0.0), {0.0, 1.0}},  // e^{z - x21}
      {cplx(std::exp(x22), 0.0), {0.0, -1.0}},  // e^{x22 - z}
      {cplx(std::exp(-x22), 0.0), {0.0, -1.0}},
      {cplx(1.0, 0.0), {1.0, -1.0}},  // e^{x - z}
      {cplx(1.0, 0.0), {-1.0, -1.0}},
  };
  if (!quad::contours_admissible(terms, {0.0, 1.0}))
    throw std::domain_error("psi_d2: contours (Im x11=0, Im z11=pi) rejected");
  if (quad::contours_admissible(terms, {0.0, 0.0}))
    throw std::logic_error("psi_d2: unshifted contour unexpectedly admissible");
}

// plain trapezoid on the product rule [-T,T]^2 with n nodes per axis
cplx d2_product_rule(const D2TwoD& f, double T, std::size_t n) {
  const double h = 2.0 * T / static_cast<double>(n - 1);
  const cplx zshift(0.0, kPi);
  std::vector<cplx> zvals(n);
  cplx total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double x = -T + h * static_cast<double>(i);
    double wx = (i == 0 || i + 1 == n) ? 0.5 : 1.0;
    cplx row = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      double t = -T + h * static_cast<double>(j);
      double wz = (j == 0 || j + 1 == n) ? 0.5 : 1.0;
      row += wz * f(x, t + zshift);
    }
    total += wx * row;
  }
  return total * h * h;
}

// frozen-rule evaluator: the node count is calibrated once (doubling until
// two successive estimates agree) and then reused for every sample, so the
// quadrature error is a smooth function of the position parameters
struct D2Frozen {
  double l1, l2, tol;
  double T = 10.0;
  std::size_t nodes = 0;
  double calib_error = 0.0;

  void calibrate(double x21, double x22) {
    D2TwoD f{l1, l2, x21, x22};
    std::size_t n = 129;
    cplx prev = d2_product_rule(f, T, n);
    while (true) {
      n = 2 * n - 1;
      cplx cur = d2_product_rule(f, T, n);
      calib_error = std::abs(cur - prev);
      prev = cur;
      if (calib_error <= tol) break;
      if (n > 5000) throw quad::QuadFailure("psi_d2: node budget exhausted", {cur, calib_error, n, false});
    }
    nodes = 2 * n - 1;  // one extra doubling as margin
  }

  cplx eval(double x21, double x22) const {
    check_d2_contours(x21, x22);
    return d2_product_rule(D2TwoD{l1, l2, x21, x22}, T, nodes);
  }
};

// --- D2, 3-variable form --------------------------------------------------

// y-level of the 3-variable form: J(B) = Int_{Im y = pi} e^{2 i l2 y} exp{B e^{-y}} dy.
// On the shifted line this is e^{-2 pi l2} Int e^{2 i l2 t} exp{-B e^{-t}} dt,
// which decays doubly exponentially for t -> -inf but only oscillates for
// t -> +inf; the flat tail is summed analytically:
//   Int_Y^inf = Sum_k (-B)^k/k! e^{(2 i l2 - k) Y}/(k - 2 i l2).
cplx y_level(double B, double l2) {
  const double Y = std::max(0.0, std::log(B)) + 2.0;
  const double T = std::log(745.0 / B) + 1.0;  // exp(-B e^{T}) underflows past here
  // numeric part on [-T, Y], trapezoid with doubling
  auto g = [&](double t) { return std::exp(2.0 * kI * l2 * t - B * std::exp(-t)); };
  std::size_t n = 129;
  auto rule = [&](std::size_t m) {
    double h = (Y + T) / static_cast<double>(m - 1);
    cplx s = 0.5 * (g(-T) + g(Y));
    for (std::size_t i = 1; i + 1 < m; ++i) s += g(-T + h * static_cast<double>(i));
    return s * h;
  };
  cplx prev = rule(n);
  while (true) {
    n = 2 * n - 1;
    cplx cur = rule(n);
    if (std::abs(cur - prev) < 1e-13 || n > (1u << 18)) {
      prev = cur;
      break;
    }
    prev = cur;
  }
  // analytic tail
  cplx tail = 0.0;
  double term = 1.0;  // B^k / k!
  for (int k = 0; k <= 40; ++k) {
    double sgn = (k % 2 == 0) ? 1.0 : -1.0;
    tail += sgn * term * std::exp((2.0 * kI * l2 - static_cast<double>(k)) * Y) /
            (static_cast<double>(k) - 2.0 * kI * l2);
    term *= B / static_cast<double>(k + 1);
  }
  return std::exp(-2.0 * kPi * l2) * (prev + tail);
}

cplx d2_threeD(double l1, double l2, double x21, double x22, double tol, double* err_out) {
  check_d2_contours(x21, x22);
  quad::ContourSpec cx, cz;
  cx.offset_pi = 0.0;
  cx.tol = tol;
  cz.offset_pi = 1.0;
  cz.tol = tol / 4.0;
  double worst_inner = 0.0;
  quad::QuadResult outer = quad::integrate_contour_1d(
      [&](cplx xv) {
        double x = xv.real();
        double B = std::exp(-x22) + std::exp(-x);
        cplx J = y_level(B, l2);
        quad::QuadResult inner = quad::integrate_contour_1d(
            [&](cplx z) {
              cplx phase = kI * (l2 * (x22 + x21) + (l2 + l1) * x) - 2.0 * kI * l2 * z;
              cplx expo = std::exp(z - x21) + std::exp(x22 - z) + std::exp(-x22 - z) +
                          std::exp(x - z) + std::exp(-x - z);
              return std::exp(phase + expo);
            },
            cz);
        worst_inner = std::max(worst_inner, inner.abs_error);
        return inner.value * J;
      },
      cx);
  if (err_out) *err_out = outer.abs_error + worst_inner;
  return outer.value;
}

}  // namespace

cplx y_compensation(double l2) {
  return quad::complex_gamma(cplx(0.0, 2.0 * l2)) /
         (std::exp(-2.0 * kPi * l2) * quad::complex_gamma(cplx(0.0, -2.0 * l2)));
}

WavePoint psi_d2(double l1, double l2, double x21, double x22, D2Form form, double tol) {
  if (std::abs(x21) > 2.0 || std::abs(x22) > 2.0)
    throw std::domain_error("psi_d2: positions outside validated range |x| <= 2");
  double t0 = now_seconds();
  WavePoint p;
  p.n = 2;
  p.lambda = {l1, l2};
  p.x = {x21, x22};
  if (form == D2Form::twoD) {
    D2Frozen ev{l1, l2, tol};
    ev.calibrate(x21, x22);
    // the printed Gamma(2 i l2) prefactor diverges at l2 = 0; there the
    // finite normalization of the recursion kernel (no Gamma) is used
    cplx pref = (l2 == 0.0) ? cplx(1.0, 0.0) : quad::complex_gamma(cplx(0.0, 2.0 * l2));
    p.value = pref * ev.eval(x21, x22);
    p.error = ev.calib_error;
  } else {
    p.value = d2_threeD(l1, l2, x21, x22, tol, &p.error);
  }
  p.seconds = now_seconds() - t0;
  return p;
}

ConsistencyReport d2_consistency(double l1, double l2, double x21, double x22, double tol) {
  ConsistencyReport rep;
  rep.twoD = psi_d2(l1, l2, x21, x22, D2Form::twoD, tol).value;
  rep.threeD = psi_d2(l1, l2, x21, x22, D2Form::threeD, tol).value;
  rep.compensation = y_compensation(l2);
  rep.rel_difference = std::abs(rep.twoD - rep.compensation * rep.threeD) / std::abs(rep.twoD);
  rep.pass = rep.rel_difference <= 1e-6;
  return rep;
}

FactorizationReport factorization_check(double l1, double l2, const std::vector<double>& xi_grid,
                                        const std::vector<double>& eta_grid, double tol,
                                        double constancy_tol) {
  FactorizationReport rep;
  D2Frozen ev{l1, l2, tol};
  ev.calibrate(0.0, 0.0);
  cplx gamma2 = quad::complex_gamma(cplx(0.0, 2.0 * l2));
  for (double xi : xi_grid)
    for (double eta : eta_grid) {
      double x21 = 0.5 * (eta - xi), x22 = 0.5 * (eta + xi);
      cplx psi = gamma2 * ev.eval(x21, x22);
      double kk = quad::bessel_K_imag_order(l2 + l1, 2.0 * std::exp(0.5 * xi)) *
                  quad::bessel_K_imag_order(l2 - l1, 2.0 * std::exp(-0.5 * eta));
      rep.ratios.push_back(psi / kk);
    }
  cplx mean = std::accumulate(rep.ratios.begin(), rep.ratios.end(), cplx(0.0, 0.0)) /
              static_cast<double>(rep.ratios.size());
  double var = 0.0;
  for (const cplx& r : rep.ratios) var += std::norm(r - mean);
  rep.mean_ratio = mean;
  rep.rel_stddev = std::sqrt(var / static_cast<double>(rep.ratios.size())) / std::abs(mean);
  rep.printed_prefactor = 4.0 * std::exp(-2.0 * kPi * l2) * gamma2;
  rep.measured_over_printed = mean / rep.printed_prefactor;
  rep.pass = rep.rel_stddev <= constancy_tol;
  rep.note =
      "Macdonald orders i(l2+l1) and i(l2-l1) with arguments 2e^{xi/2}, 2e^{-eta/2} "
      "(the half-order reading of the final display does not give a constant ratio); "
      "the measured constant is compared against 4 e^{-2 pi l2} Gamma(2 i l2)";
  return rep;
}

EigenReport eigen_residual(Operator op, double l1, double l2, double x21, double x22,
                           double fd_step, double tol) {
  EigenReport rep;
  // the quartic operator needs a mixed fourth derivative, whose roundoff
  // amplification goes like h^-4; widen the stencil to stay above the
  // double-precision noise floor
  const double h = (op == Operator::Quartic) ? 8.0 * fd_step : fd_step;
  D2Frozen ev{l1, l2, tol};
  ev.calibrate(x21, x22);
  cplx gamma2 = quad::complex_gamma(cplx(0.0, 2.0 * l2));
  auto psi = [&](double a, double b) { return gamma2 * ev.eval(a, b); };
  // 5-point second-derivative weights
  const double w[5] = {-1.0, 16.0, -30.0, 16.0, -1.0};
  const double denom = 12.0 * h * h;
  cplx center = psi(x21, x22);
  if (std::abs(center) < 1e3 * tol) {
    rep.degenerate = true;
    rep.psi = center;
    return rep;
  }
  if (op == Operator::Quadratic) {
    cplx d2a = 0.0, d2b = 0.0;
    for (int k = -2; k <= 2; ++k) {
      d2a += w[k + 2] * psi(x21 + k * h, x22);
      d2b += w[k + 2] * psi(x21, x22 + k * h);
    }
    d2a /= denom;
    d2b /= denom;
    double V = std::exp(x22 - x21) + std::exp(-x22 - x21);
    double E = 0.5 * (l1 * l1 + l2 * l2);
    cplx res = -0.5 * (d2a + d2b) + V * center - E * center;
    rep.residual = std::abs(res) / std::abs(center);
    rep.eigenvalue = E;
  } else {
    // rotated coordinates xi = x22 - x21, eta = x22 + x21;
    // H4 = (-(1/2) d^2_xi + (1/2) e^xi)(-(1/2) d^2_eta + (1/2) e^-eta)
    double xi = x22 - x21, eta = x22 + x21;
    auto sample = [&](double a, double b) {  // a = xi offset, b = eta offset
      double xi_ = xi + a, eta_ = eta + b;
      return psi(0.5 * (eta_ - xi_), 0.5 * (eta_ + xi_));
    };
    cplx grid[5][5];
    for (int i = -2; i <= 2; ++i)
      for (int j = -2; j <= 2; ++j) grid[i + 2][j + 2] = sample(i * h, j * h);
    cplx d2xi = 0.0, d2eta = 0.0, d4 = 0.0;
    for (int i = 0; i < 5; ++i) {
      d2xi += w[i] * grid[i][2];
      d2eta += w[i] * grid[2][i];
      for (int j = 0; j < 5; ++j) d4 += w[i] * w[j] * grid[i][j];
    }
    d2xi /= denom;
    d2eta /= denom;
    d4 /= denom * denom;
    double nu1 = 0.5 * (l2 + l1), nu2 = 0.5 * (l2 - l1);
    double E = 0.25 * nu1 * nu1 * nu2 * nu2;
    cplx h4 = 0.25 * d4 - 0.25 * std::exp(-eta) * d2xi - 0.25 * std::exp(xi) * d2eta +
              0.25 * std::exp(xi - eta) * center;
    cplx res = h4 - E * center;
    rep.residual = std::abs(res) / std::abs(center);
    rep.eigenvalue = E;
  }
  rep.psi = center;
  return rep;
}

// --- generic D_n recursion ------------------------------------------------

namespace {

struct Dn2Integrand {
  // rank-2 wave function assembled from the symbolic kernel catalogue
  double l1, l2, x21, x22;
  GenFunc F;  // rankdrop(1) + rankkeep(1)

  cplx operator()(double x11, cplx z11) const {
    std::map<VarId, cplx> pos = {
        {Xv(1), cplx(x21, 0.0)}, {Xv(2), cplx(x22, 0.0)}, {Wv(1), cplx(x11, 0.0)}, {Zv(1), z11}};
    cplx phase = kI * (l1 * x11 + l2 * (x21 + x22 + x11)) - 2.0 * kI * l2 * z11;
    double S = std::exp(-x22) + std::exp(-x11);
    cplx power = std::exp(2.0 * kI * l2 * std::log(S));
    return std::exp(phase + eval_exp_poly(F, pos)) * power;
  }
};

cplx psi_dn2(double l1, double l2, double x21, double x22, double tol, double* err_out) {
  GenFunc F = kernel_rankdrop(1) + kernel_rankkeep(1);
  // validate the contour choice term-by-term
  std::map<VarId, cplx> fixed = {{Xv(1), cplx(x21, 0.0)}, {Xv(2), cplx(x22, 0.0)}};
  if (!quad::contours_admissible(exp_terms(F, {Wv(1), Zv(1)}, fixed), {0.0, 1.0}))
    throw std::domain_error("psi_dn: contour (Im x11=0, Im z11=pi) rejected");
  Dn2Integrand f{l1, l2, x21, x22, F};
  std::vector<quad::ContourSpec> cs(2);
  cs[0].offset_pi = 0.0;
  cs[0].tol = tol;
  cs[1].offset_pi = 1.0;
  cs[1].tol = tol;
  quad::QuadResult r = quad::integrate_nested(
      [&](const std::vector<cplx>& v) { return f(v[0].real(), v[1]); }, cs);
  if (err_out) *err_out = r.abs_error;
  return r.value;
}

// bilinear-interpolated cache of the rank-2 function on a square grid
struct Psi2Grid {
  double lo, step;
  std::size_t n;
  std::vector<cplx> vals;  // row-major (i: x21, j: x22)

  void build(double l1, double l2, double L, std::size_t nodes, double tol) {
    lo = -L;
    n = nodes;
    step = 2.0 * L / static_cast<double>(n - 1);
    vals.assign(n * n, cplx(0.0, 0.0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        vals[i * n + j] = psi_dn2(l1, l2, lo + step * static_cast<double>(i),
                                  lo + step * static_cast<double>(j), tol, nullptr);
  }

  cplx operator()(double a, double b) const {
    double fi = (a - lo) / step, fj = (b - lo) / step;
    if (fi < 0.0 || fj < 0.0 || fi > static_cast<double>(n - 1) || fj > static_cast<double>(n - 1))
      return {0.0, 0.0};
    std::size_t i = std::min(n - 2, static_cast<std::size_t>(fi));
    std::size_t j = std::min(n - 2, static_cast<std::size_t>(fj));
    double u = fi - static_cast<double>(i), v = fj - static_cast<double>(j);
    return (1 - u) * (1 - v) * vals[i * n + j] + u * (1 - v) * vals[(i + 1) * n + j] +
           (1 - u) * v * vals[i * n + j + 1] + u * v * vals[(i + 1) * n + j + 1];
  }
};

cplx psi_dn3_rule(const std::vector<double>& lambda, const std::vector<double>& x,
                  const Psi2Grid& grid, const GenFunc& F, double Tx, std::size_t nx, double Tz,
                  std::size_t nz) {
  const double l3 = lambda[2];
  const double hx = 2.0 * Tx / static_cast<double>(nx - 1);
  const double hz = 2.0 * Tz / static_cast<double>(nz - 1);
  const cplx zshift(0.0, kPi);
  cplx total = 0.0;
  std::map<VarId, cplx> pos = {{Xv(1), cplx(x[0], 0.0)}, {Xv(2), cplx(x[1], 0.0)},
                               {Xv(3), cplx(x[2], 0.0)}, {Wv(1), 0.0}, {Wv(2), 0.0},
                               {Zv(1), 0.0},             {Zv(2), 0.0}};
  auto wt = [](std::size_t i, std::size_t m) { return (i == 0 || i + 1 == m) ? 0.5 : 1.0; };
  for (std::size_t i1 = 0; i1 < nx; ++i1) {
    double a = -Tx + hx * static_cast<double>(i1);
    pos[Wv(1)] = cplx(a, 0.0);
    for (std::size_t i2 = 0; i2 < nx; ++i2) {
      double b = -Tx + hx * static_cast<double>(i2);
      pos[Wv(2)] = cplx(b, 0.0);
      cplx inner = grid(a, b);
      if (inner == cplx(0.0, 0.0)) continue;
      double S = std::exp(-x[2]) + std::exp(-b);
      cplx power = std::exp(2.0 * kI * l3 * std::log(S));
      cplx acc = 0.0;
      for (std::size_t j1 = 0; j1 < nz; ++j1) {
        pos[Zv(1)] = cplx(-Tz + hz * static_cast<double>(j1), kPi);
        for (std::size_t j2 = 0; j2 < nz; ++j2) {
          pos[Zv(2)] = cplx(-Tz + hz * static_cast<double>(j2), kPi);
          cplx phase = kI * l3 *
                       (x[0] + x[1] + x[2] + a + b - 2.0 * (pos[Zv(1)] + pos[Zv(2)]));
          acc += wt(j1, nz) * wt(j2, nz) * std::exp(phase + eval_exp_poly(F, pos));
        }
      }
      total += wt(i1, nx) * wt(i2, nx) * acc * power * inner;
    }
  }
  return total * hx * hx * hz * hz;
}

}  // namespace

WavePoint psi_dn(unsigned n, const std::vector<double>& lambda, const std::vector<double>& x,
                 double tol) {
  if (n != 2 && n != 3) throw std::domain_error("psi_dn: n must be 2 or 3");
  if (lambda.size() != n || x.size() != n) throw std::invalid_argument("psi_dn: size mismatch");
  double t0 = now_seconds();
  WavePoint p;
  p.n = n;
  p.lambda = lambda;
  p.x = x;
  if (n == 2) {
    p.value = psi_dn2(lambda[0], lambda[1], x[0], x[1], tol, &p.error);
  } else {
    // frozen coarse rule with the rank-2 inner function cached on a grid;
    // the error estimate compares two node densities
    Psi2Grid grid;
    grid.build(lambda[0], lambda[1], 5.0, 21, std::max(tol, 1e-6));
    GenFunc F = kernel_rankdrop(2) + kernel_rankkeep(2);
    // relabel: rankdrop's X block is the rank-3 chain; W block the rank-2 one
    cplx fine = psi_dn3_rule(lambda, x, grid, F, 5.0, 41, 8.0, 49);
    cplx coarse = psi_dn3_rule(lambda, x, grid, F, 5.0, 31, 8.0, 37);
    p.value = fine;
    p.error = std::abs(fine - coarse);
  }
  p.seconds = now_seconds() - t0;
  return p;
}

}  // namespace toda::wave
