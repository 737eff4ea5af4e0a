// Command-line front-end: runs the exact identity suites and the numeric
// wave-function checks, emitting newline-delimited JSON reports.
//
// Exit codes: 0 all checks pass, 1 usage error, 2 identity/check failure,
// 3 quadrature failure.

#include "CLI11.hpp"
#include "json.hpp"

#include "toda/kernels.hpp"
#include "toda/lax.hpp"
#include "toda/wavefunc.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <future>
#include <iostream>
#include <optional>
#include <semaphore>
#include <sstream>
#include <string>
#include <vector>

namespace {

using nlohmann::json;

// --- small parsers ----------------------------------------------------------

// "2..5" or "3" -> inclusive range
std::pair<unsigned, unsigned> parse_range(const std::string& s) {
  auto dots = s.find("..");
  unsigned lo, hi;
  try {
    if (dots == std::string::npos) {
      lo = hi = static_cast<unsigned>(std::stoul(s));
    } else {
      lo = static_cast<unsigned>(std::stoul(s.substr(0, dots)));
      hi = static_cast<unsigned>(std::stoul(s.substr(dots + 2)));
    }
  } catch (const std::exception&) {
    throw CLI::ValidationError("range", "expected N or A..B, got '" + s + "'");
  }
  if (lo > hi) throw CLI::ValidationError("range", "empty range '" + s + "'");
  return {lo, hi};
}

std::vector<double> parse_doubles(const std::string& s) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      out.push_back(std::stod(tok));
    } catch (const std::exception&) {
      throw CLI::ValidationError("number list", "bad value '" + tok + "'");
    }
  }
  return out;
}

// "lo:hi:count" -> equally spaced grid (count >= 1; count == 1 gives lo)
std::vector<double> parse_grid(const std::string& s) {
  double lo, hi;
  unsigned count;
  char c1, c2;
  std::stringstream ss(s);
  if (!(ss >> lo >> c1 >> hi >> c2 >> count) || c1 != ':' || c2 != ':' || count == 0)
    throw CLI::ValidationError("grid", "expected lo:hi:count, got '" + s + "'");
  std::vector<double> g;
  for (unsigned i = 0; i < count; ++i)
    g.push_back(count == 1 ? lo : lo + (hi - lo) * i / (count - 1));
  return g;
}

// Mutation specs: "R:r,c" / "M:r,c" / "N:r,c" (entry sign flip),
// "R:corner-sign" / "M:corner-sign" / "N:corner-sign" (a fixed nonzero
// entry chosen by rank), "momentum:i", "counterterm:i", "shift".
toda::Mutation parse_mutation(const std::string& s, unsigned rank) {
  using M = toda::Mutation;
  auto colon = s.find(':');
  std::string head = s.substr(0, colon == std::string::npos ? s.size() : colon);
  std::string rest = colon == std::string::npos ? "" : s.substr(colon + 1);
  auto entry = [&](M::Target t) {
    if (rest == "corner-sign") {
      // M/N: the 1/u sub-diagonal corner; R: the -u/2 corner.
      if (t == M::MatrixR) return M{t, 1, rank};
      return M{t, rank + 1, 1};
    }
    auto comma = rest.find(',');
    if (comma == std::string::npos)
      throw CLI::ValidationError("mutate", "expected " + head + ":r,c or " + head + ":corner-sign");
    return M{t, static_cast<unsigned>(std::stoul(rest.substr(0, comma))),
             static_cast<unsigned>(std::stoul(rest.substr(comma + 1)))};
  };
  try {
    if (head == "M") return entry(M::MatrixM);
    if (head == "N") return entry(M::MatrixN);
    if (head == "R") return entry(M::MatrixR);
    if (head == "momentum") return M{M::Momentum, static_cast<unsigned>(std::stoul(rest)), 0};
    if (head == "counterterm") return M{M::Counterterm, static_cast<unsigned>(std::stoul(rest)), 0};
    if (head == "shift") return M{M::Shift, 0, 0};
  } catch (const CLI::ValidationError&) {
    throw;
  } catch (const std::exception&) {
    throw CLI::ValidationError("mutate", "bad index in '" + s + "'");
  }
  throw CLI::ValidationError("mutate", "unknown mutation target '" + head + "'");
}

// "g1=2,g3=5" -> coupling bindings for verify_factorization
std::map<toda::VarId, toda::LaurentPoly> parse_couplings(const std::string& s) {
  std::map<toda::VarId, toda::LaurentPoly> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    auto eq = tok.find('=');
    if (eq == std::string::npos || tok.size() < 4 || tok[0] != 'g')
      throw CLI::ValidationError("couplings", "expected gI=V, got '" + tok + "'");
    try {
      unsigned idx = static_cast<unsigned>(std::stoul(tok.substr(1, eq - 1)));
      long val = std::stol(tok.substr(eq + 1));
      out[toda::Gv(idx)] = toda::LaurentPoly(val);
    } catch (const std::exception&) {
      throw CLI::ValidationError("couplings", "bad entry '" + tok + "'");
    }
  }
  return out;
}

json report_to_json(const toda::IdentityReport& r) {
  json j;
  j["name"] = r.name;
  j["rank"] = r.rank;
  j["pass"] = r.pass;
  j["residuals"] = r.residuals;
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

json wavepoint_to_json(const toda::wave::WavePoint& p) {
  json j;
  j["n"] = p.n;
  j["lambda"] = p.lambda;
  j["x"] = p.x;
  j["value_re"] = p.value.real();
  j["value_im"] = p.value.imag();
  j["error"] = p.error;
  j["seconds"] = p.seconds;
  return j;
}

// Output sink: stdout or --out file, one JSON object per line.
struct Sink {
  std::ofstream file;
  std::ostream* os = &std::cout;
  void open(const std::string& path) {
    if (path.empty()) return;
    file.open(path);
    if (!file) throw CLI::ValidationError("out", "cannot open '" + path + "'");
    os = &file;
  }
  void line(const json& j) { (*os) << j.dump() << "\n"; }
};

unsigned worker_count(std::size_t jobs) {
  unsigned w = std::thread::hardware_concurrency();
  if (const char* env = std::getenv("TODA_WORKERS")) {
    try {
      w = static_cast<unsigned>(std::stoul(env));
    } catch (const std::exception&) {
      w = 0;
    }
  }
  if (w == 0) w = 1;
  return static_cast<unsigned>(std::min<std::size_t>(w, jobs));
}

// Runs independent report jobs on a bounded pool; results keep job order.
std::vector<toda::IdentityReport> run_jobs(
    const std::vector<std::function<toda::IdentityReport()>>& jobs) {
  unsigned workers = worker_count(jobs.size());
  std::counting_semaphore<256> slots(workers);
  std::vector<std::future<toda::IdentityReport>> futures;
  futures.reserve(jobs.size());
  for (const auto& job : jobs)
    futures.push_back(std::async(std::launch::async, [&slots, job] {
      slots.acquire();
      try {
        auto r = job();
        slots.release();
        return r;
      } catch (...) {
        slots.release();
        throw;
      }
    }));
  std::vector<toda::IdentityReport> out;
  out.reserve(jobs.size());
  for (auto& f : futures) out.push_back(f.get());
  return out;
}

// --- verify -----------------------------------------------------------------

int cmd_verify(const std::string& suite, const std::string& rank_range,
               const std::string& k_range, const std::string& mutate_spec,
               const std::string& couplings_spec, const std::string& out_path) {
  Sink sink;
  sink.open(out_path);

  auto [rank_lo, rank_hi] = parse_range(rank_range);
  auto [k_lo, k_hi] = parse_range(k_range);
  if (rank_lo < 2) throw CLI::ValidationError("rank", "rank must be >= 2");
  if (k_lo < 1) throw CLI::ValidationError("k", "k must be >= 1");
  auto couplings = parse_couplings(couplings_spec);

  std::vector<std::function<toda::IdentityReport()>> jobs;
  auto want = [&](const std::string& s) { return suite == s || suite == "all"; };

  if (want("factorization"))
    for (unsigned n = rank_lo; n <= rank_hi; ++n)
      jobs.push_back([n, couplings, mutate_spec] {
        std::optional<toda::Mutation> m;
        if (!mutate_spec.empty()) m = parse_mutation(mutate_spec, n);
        return toda::verify_factorization(n, couplings, m);
      });
  if (want("det"))
    for (unsigned n = rank_lo; n <= rank_hi; ++n)
      jobs.push_back([n, mutate_spec] {
        std::optional<toda::Mutation> m;
        if (!mutate_spec.empty()) m = parse_mutation(mutate_spec, n);
        return toda::verify_det_identity(n, m);
      });
  if (want("mn"))
    for (unsigned n = rank_lo; n <= rank_hi; ++n)
      jobs.push_back([n, mutate_spec] {
        std::optional<toda::Mutation> m;
        if (!mutate_spec.empty()) m = parse_mutation(mutate_spec, n);
        return toda::verify_MN_intertwining(n, m);
      });
  if (want("h2"))
    for (unsigned n = rank_lo; n <= rank_hi; ++n)
      jobs.push_back([n] { return toda::verify_h2_suite(n); });
  if (want("limits"))
    for (unsigned n = rank_lo; n <= rank_hi; ++n)
      jobs.push_back([n] { return toda::coupling_limit_kernels(n); });
  if (want("recursive"))
    for (unsigned k = k_lo; k <= k_hi; ++k)
      jobs.push_back([k, mutate_spec] {
        std::optional<toda::Mutation> m;
        if (!mutate_spec.empty()) m = parse_mutation(mutate_spec, k);
        return toda::verify_recursive_intertwining(k, m);
      });

  if (jobs.empty()) throw CLI::ValidationError("suite", "unknown suite '" + suite + "'");

  bool all_pass = true;
  for (const auto& r : run_jobs(jobs)) {
    sink.line(report_to_json(r));
    all_pass = all_pass && r.pass;
  }
  return all_pass ? 0 : 2;
}

// --- eval -------------------------------------------------------------------

int cmd_eval_a1(double nu, double y, double tol, const std::string& out_path) {
  Sink sink;
  sink.open(out_path);
  auto t0 = std::chrono::steady_clock::now();
  auto rep = toda::wave::chi_a1_report(nu, y, tol);
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  toda::wave::WavePoint p{1, {nu}, {y}, rep.chi, tol, secs};
  sink.line(wavepoint_to_json(p));
  json ratio;
  ratio["bessel"] = rep.bessel;
  ratio["ratio_re"] = rep.ratio.real();
  ratio["ratio_im"] = rep.ratio.imag();
  sink.line(ratio);
  return 0;
}

int cmd_eval_d2(const std::vector<double>& lambda, const std::vector<double>& grid,
                const std::string& form_name, double tol, const std::string& out_path) {
  Sink sink;
  sink.open(out_path);
  auto form = form_name == "threeD" ? toda::wave::D2Form::threeD : toda::wave::D2Form::twoD;
  for (double x21 : grid)
    for (double x22 : grid)
      sink.line(wavepoint_to_json(toda::wave::psi_d2(lambda[0], lambda[1], x21, x22, form, tol)));
  return 0;
}

int cmd_eval_d2check(const std::vector<double>& lambda, const std::vector<double>& grid,
                     double tol, const std::string& out_path) {
  Sink sink;
  sink.open(out_path);
  auto rep = toda::wave::factorization_check(lambda[0], lambda[1], grid, grid, tol);
  json j;
  j["name"] = "d2_factorization";
  j["pass"] = rep.pass;
  j["mean_ratio_re"] = rep.mean_ratio.real();
  j["mean_ratio_im"] = rep.mean_ratio.imag();
  j["rel_stddev"] = rep.rel_stddev;
  j["printed_prefactor_re"] = rep.printed_prefactor.real();
  j["printed_prefactor_im"] = rep.printed_prefactor.imag();
  j["measured_over_printed_re"] = rep.measured_over_printed.real();
  j["measured_over_printed_im"] = rep.measured_over_printed.imag();
  j["note"] = rep.note;
  sink.line(j);
  auto cons = toda::wave::d2_consistency(lambda[0], lambda[1], 0.2, -0.1, tol);
  json c;
  c["name"] = "d2_form_consistency";
  c["pass"] = cons.pass;
  c["rel_difference"] = cons.rel_difference;
  sink.line(c);
  return (rep.pass && cons.pass) ? 0 : 2;
}

// --- hamiltonians -----------------------------------------------------------

int cmd_hamiltonians(const std::string& family_name, unsigned rank, const std::string& out_path) {
  Sink sink;
  sink.open(out_path);
  toda::Family family;
  if (family_name == "D")
    family = toda::Family::D;
  else if (family_name == "C")
    family = toda::Family::C;
  else if (family_name == "twistedA")
    family = toda::Family::TwistedA;
  else
    throw CLI::ValidationError("family", "unknown family '" + family_name + "'");
  auto L = toda::build_L({family, rank, {}});
  auto ch = toda::char_hamiltonians(L);
  for (const auto& [power, coeff] : ch.by_lambda_power) {
    json j;
    j["family"] = family_name;
    j["rank"] = rank;
    j["lambda_power"] = power;
    j["coefficient"] = coeff.str();
    sink.line(j);
  }
  if (!ch.u_part.is_zero() || !ch.u_inv_part.is_zero()) {
    json j;
    j["family"] = family_name;
    j["rank"] = rank;
    j["u_coefficient"] = ch.u_part.str();
    j["u_inverse_coefficient"] = ch.u_inv_part.str();
    sink.line(j);
  }
  json h2;
  h2["family"] = family_name;
  h2["rank"] = rank;
  h2["quadratic_hamiltonian"] = toda::quadratic_hamiltonian(L, rank).str();
  sink.line(h2);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact and numeric verification suite for the open Toda chain constructions"};
  app.require_subcommand(1);

  // verify
  std::string suite = "all", rank_range = "2..3", k_range = "1..2";
  std::string mutate_spec, couplings_spec, out_path;
  auto* verify = app.add_subcommand("verify", "run exact symbolic identity suites");
  verify->add_option("--suite", suite,
                     "factorization | det | mn | h2 | limits | recursive | all");
  verify->add_option("--rank", rank_range, "rank or range A..B (default 2..3)");
  verify->add_option("--k", k_range, "recursion depth or range A..B (default 1..2)");
  verify->add_option("--mutate", mutate_spec,
                     "negative control, e.g. R:2,3 | N:corner-sign | momentum:1 | shift");
  verify->add_option("--couplings", couplings_spec, "coupling bindings, e.g. g1=2,g2=1");
  verify->add_option("--out", out_path, "report file (default stdout)");

  // eval
  auto* eval = app.add_subcommand("eval", "numeric wave-function evaluation");
  eval->require_subcommand(1);
  std::string lambda_spec = "0.3,0.7", grid_spec = "-1:1:3", form_name = "twoD";
  double nu = 0.5, y = 0.0, tol = 1e-9;
  std::string eval_out;
  auto* a1 = eval->add_subcommand("a1", "rank-1 eigenfunction vs the Macdonald oracle");
  a1->add_option("--nu", nu, "spectral parameter");
  a1->add_option("--y", y, "position");
  a1->add_option("--tol", tol, "quadrature tolerance");
  a1->add_option("--out", eval_out, "report file (default stdout)");
  auto* d2 = eval->add_subcommand("d2", "rank-2 wave function on a position grid");
  d2->add_option("--lambda", lambda_spec, "spectral vector l1,l2");
  d2->add_option("--grid", grid_spec, "per-axis grid lo:hi:count for (x21,x22)");
  d2->add_option("--form", form_name, "twoD | threeD");
  d2->add_option("--tol", tol, "quadrature tolerance");
  d2->add_option("--out", eval_out, "report file (default stdout)");
  auto* d2check = eval->add_subcommand("d2check", "rank-2 factorization and form consistency");
  d2check->add_option("--lambda", lambda_spec, "spectral vector l1,l2");
  d2check->add_option("--grid", grid_spec, "per-axis grid lo:hi:count for (xi,eta)");
  d2check->add_option("--tol", tol, "quadrature tolerance");
  d2check->add_option("--out", eval_out, "report file (default stdout)");

  // hamiltonians
  std::string family_name = "D";
  unsigned rank = 2;
  std::string ham_out;
  auto* ham = app.add_subcommand("hamiltonians",
                                 "characteristic-polynomial Hamiltonians of one family");
  ham->add_option("--family", family_name, "D | C | twistedA")->required();
  ham->add_option("--rank", rank, "chain rank (>= 2)")->required();
  ham->add_option("--out", ham_out, "report file (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*verify)
      return cmd_verify(suite, rank_range, k_range, mutate_spec, couplings_spec, out_path);
    if (*ham) {
      if (rank < 2) throw CLI::ValidationError("rank", "rank must be >= 2");
      return cmd_hamiltonians(family_name, rank, ham_out);
    }
    if (*a1) return cmd_eval_a1(nu, y, tol, eval_out);
    auto lambda = parse_doubles(lambda_spec);
    if (lambda.size() != 2) throw CLI::ValidationError("lambda", "expected l1,l2");
    auto grid = parse_grid(grid_spec);
    if (*d2) return cmd_eval_d2(lambda, grid, form_name, tol, eval_out);
    if (*d2check) return cmd_eval_d2check(lambda, grid, tol, eval_out);
  } catch (const toda::quad::QuadFailure& e) {
    std::cerr << json{{"error", "quadrature failure"}, {"what", e.what()}}.dump() << "\n";
    return 3;
  } catch (const CLI::ValidationError& e) {
    std::cerr << json{{"error", "usage"}, {"what", e.what()}}.dump() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << json{{"error", "internal"}, {"what", e.what()}}.dump() << "\n";
    return 2;
  }
  return 1;
}
