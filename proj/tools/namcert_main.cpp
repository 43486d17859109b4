// Command-line front end: deterministic CSV tables and certification reports.
//
// Exit codes: 0 ok, 1 usage error, 2 certification/bound failure,
// 3 no rate found, 4 divergence.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "namcert/bench.hpp"
#include "namcert/certificate.hpp"
#include "namcert/model.hpp"
#include "namcert/rng.hpp"
#include "namcert/sdpsearch.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitCertFail = 2;
constexpr int kExitNoRate = 3;
constexpr int kExitDiverged = 4;

// fixed-width scientific, 9 significant digits
std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.8e", v);
  return buf;
}

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// data goes to --out when given, otherwise to stdout
class OutFile {
 public:
  explicit OutFile(const std::string& path) {
    if (path.empty()) return;
    file_ = std::make_unique<std::ofstream>(path);
    if (!*file_) throw UsageError("cannot open output file: " + path);
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }
  void finish() {
    stream().flush();
    if (file_ && !*file_) throw UsageError("error writing output file");
  }

 private:
  std::unique_ptr<std::ofstream> file_;
};

std::vector<double> log_grid(double lo, double hi, int points) {
  std::vector<double> g(points);
  const double llo = std::log(lo);
  const double lhi = std::log(hi);
  for (int i = 0; i < points; ++i)
    g[i] = std::exp(llo + (lhi - llo) * i / (points - 1.0));
  g.front() = lo;
  g.back() = hi;
  return g;
}

int cmd_rates(double kmin, double kmax, int points, const std::string& out_path) {
  if (!(kmin >= 1.0) || !(kmax > kmin)) throw UsageError("need 1 <= kappa-min < kappa-max");
  if (points < 2) throw UsageError("need points >= 2");

  const std::vector<double> grid = log_grid(kmin, kmax, points);
  const auto rows = namcert::rate_table(grid);

  OutFile out(out_path);
  out.stream() << "kappa,tau_bp,tau_lq,tau_nq,tau_ours,tau_ng,beta_classic,beta_opt\n";
  for (const auto& r : rows)
    out.stream() << num(r.kappa) << ',' << num(r.tau_bp) << ',' << num(r.tau_lq) << ','
                 << num(r.tau_nq) << ',' << num(r.tau_ours) << ',' << num(r.tau_ng) << ','
                 << num(r.beta_classic) << ',' << num(r.beta_opt) << '\n';
  out.finish();
  return kExitOk;
}

int cmd_certify(double m, double L, double beta_in, double tau_in, bool has_beta,
                bool has_tau) {
  namcert::ConditionClass cond(m, L);
  const double kappa = cond.kappa();

  namcert::CertifiedRate res;
  if (!has_beta && !has_tau) {
    res = namcert::certified_rate(cond);
  } else {
    if (!(kappa > 1.0)) throw UsageError("--beta/--tau overrides require L > m");
    const double beta = has_beta ? beta_in : namcert::optimal_tuning(kappa).beta;
    double tau = tau_in;
    if (!has_tau) {
      // smallest rate root in (0,1) for the requested momentum
      tau = -1.0;
      for (const double w : namcert::rate_cubic_roots(kappa, beta))
        if (w > 0.0 && w < 1.0) {
          tau = std::sqrt(w);
          break;
        }
      if (tau < 0.0) throw UsageError("no rate root in (0,1) for this beta; pass --tau");
    }
    res = namcert::certify_point(cond, beta, tau);
  }

  const auto& rep = res.report;
  std::cout << "certify m=" << num(m) << " L=" << num(L) << " kappa=" << num(kappa) << "\n"
            << "alpha  = " << num(res.params.alpha) << "\n"
            << "beta   = " << num(res.params.beta) << "\n"
            << "tau    = " << num(res.tau) << "\n"
            << "lambda_min_P = " << num(rep.min_eig_P) << "\n"
            << "lambda_min_H = " << num(rep.min_eig_H) << "\n"
            << "kappa_P      = " << num(rep.kappa_P) << "\n"
            << "schur_h3_min_eig         = " << num(rep.schur_h3_min_eig) << "\n"
            << "schur_range_residual     = " << num(rep.schur_range_residual) << "\n"
            << "schur_complement_min_eig = " << num(rep.schur_complement_min_eig) << "\n"
            << "det_H3 = " << num(rep.det_h3) << "\n"
            << "sylvester_minors = " << num(rep.sylvester_minors[0]) << ' '
            << num(rep.sylvester_minors[1]) << ' ' << num(rep.sylvester_minors[2]) << "\n"
            << "RESULT " << (res.ok ? "PASS" : "FAIL") << "\n";
  std::cout << "summary m=" << num(m) << " L=" << num(L) << " alpha=" << num(res.params.alpha)
            << " beta=" << num(res.params.beta) << " tau=" << num(res.tau)
            << " pass=" << (res.ok ? 1 : 0) << "\n";
  return res.ok ? kExitOk : kExitCertFail;
}

int cmd_search(double kappa, const std::string& beta_rule, double tol,
               const std::string& trace_path) {
  if (!(kappa > 1.0)) throw UsageError("search requires kappa > 1");
  double beta;
  if (beta_rule == "optimal")
    beta = namcert::optimal_tuning(kappa).beta;
  else if (beta_rule == "nesterov")
    beta = namcert::classic_beta(kappa);
  else
    throw UsageError("--beta-rule must be optimal or nesterov");

  const namcert::SearchResult sr = namcert::bisect_tau(kappa, beta, tol);

  if (!trace_path.empty()) {
    OutFile out(trace_path);
    out.stream() << "step,tau,feasible,residual\n";
    for (const auto& e : sr.trace)
      out.stream() << e.step << ',' << num(e.tau) << ','
                   << (e.verdict == namcert::Verdict::Feasible ? 1 : 0) << ','
                   << num(e.margin) << '\n';
    out.finish();
  }

  if (sr.no_rate_found) {
    std::cerr << "no rate found: LMI infeasible up to tau = 1 - 1e-9\n";
    return kExitNoRate;
  }
  std::cout << "tau_star=" << num(sr.tau_star) << " beta=" << num(beta)
            << " iterations=" << sr.iterations << " residual=" << num(sr.residual)
            << " bracket=[" << num(sr.bracket_lo) << ',' << num(sr.bracket_hi) << "]\n";
  return kExitOk;
}

int cmd_simulate(const std::string& function, double m, double L, int dim, int iters,
                 std::uint64_t seed, const std::string& out_path) {
  if (dim < 1) throw UsageError("need --dim >= 1");
  if (iters < 0) throw UsageError("need --iters >= 0");
  namcert::ConditionClass cond(m, L);

  namcert::TestFunction f;
  if (function == "quadratic") {
    if (dim == 1 && m != L) throw UsageError("quadratic with dim 1 requires m == L");
    std::vector<double> spectrum(dim, L);
    spectrum[0] = m;
    f = namcert::make_quadratic(dim, spectrum, m, L);
  } else if (function == "logcosh") {
    if (!(m < L)) throw UsageError("logcosh requires m < L");
    f = namcert::make_logcosh(dim, m, L);
  } else {
    throw UsageError("--function must be quadratic or logcosh");
  }

  const namcert::CertifiedRate cr = namcert::certified_rate(cond);
  if (!cr.ok) {
    std::cerr << "certificate verification failed for m=" << m << " L=" << L << "\n";
    return kExitCertFail;
  }

  namcert::Rng rng(seed);
  const std::vector<double> x0 = rng.sphere_point(dim, 10.0);
  const std::vector<double> x1 = rng.sphere_point(dim, 10.0);

  namcert::TrajectoryRecord rec;
  try {
    rec = namcert::run_trajectory(f, cr.params, x0, x1, iters + 1, cr.cert);
  } catch (const namcert::DivergenceError& ex) {
    std::cerr << ex.what() << "\n";
    return kExitDiverged;
  }

  OutFile out(out_path);
  out.stream() << "t,dist,bound\n";
  const double lead = std::sqrt(rec.kappa_P) * rec.C0;
  double pow_tau = 1.0;
  for (std::size_t t = 0; t < rec.dist.size(); ++t) {
    out.stream() << t << ',' << num(rec.dist[t]) << ',' << num(lead * pow_tau) << '\n';
    pow_tau *= rec.tau_used;
  }
  out.finish();

  std::cout << "fitted_rate=" << num(rec.fitted_rate) << " tau=" << num(rec.tau_used)
            << " kappa_P=" << num(rec.kappa_P) << " violations=" << rec.bound_violations
            << "\n";
  return rec.bound_violations > 0 ? kExitCertFail : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Convergence-rate certificates and benchmarks for the momentum method"};
  app.require_subcommand(1);

  auto* rates = app.add_subcommand("rates", "Reference-rate table over a kappa grid (CSV)");
  double kmin = 1.0, kmax = 1e4;
  int points = 100;
  std::string rates_out;
  rates->add_option("--kappa-min", kmin, "Smallest kappa (>= 1)")->required();
  rates->add_option("--kappa-max", kmax, "Largest kappa")->required();
  rates->add_option("--points", points, "Number of log-spaced rows")->required();
  rates->add_option("--out", rates_out, "Output CSV path (default: stdout)");

  auto* certify = app.add_subcommand("certify", "Certify a rate for given (m, L)");
  double cm = 1.0, cL = 1.0, cbeta = 0.0, ctau = 0.0;
  certify->add_option("--m", cm, "Strong convexity modulus")->required();
  certify->add_option("--L", cL, "Gradient Lipschitz constant")->required();
  auto* ob = certify->add_option("--beta", cbeta, "Certify this momentum instead of the optimum");
  auto* ot = certify->add_option("--tau", ctau, "Certify this rate instead of the optimum");

  auto* search = app.add_subcommand("search", "Bisect tau against LMI feasibility");
  double skappa = 0.0, stol = 1e-4;
  std::string srule = "optimal", strace;
  search->add_option("--kappa", skappa, "Condition number (> 1)")->required();
  search->add_option("--beta-rule", srule, "optimal|nesterov (default optimal)");
  search->add_option("--tol", stol, "Bisection tolerance on tau (>= 1e-6)")->required();
  search->add_option("--trace", strace, "Write the bisection trace CSV here");

  auto* simulate = app.add_subcommand("simulate", "Run the iteration and check the bound (CSV)");
  std::string sfun = "quadratic", sout;
  double sm = 1.0, sL = 100.0;
  int sdim = 2, siters = 2000;
  std::uint64_t sseed = 12345;
  simulate->add_option("--function", sfun, "quadratic|logcosh")->required();
  simulate->add_option("--m", sm, "Strong convexity modulus")->required();
  simulate->add_option("--L", sL, "Gradient Lipschitz constant")->required();
  simulate->add_option("--dim", sdim, "Dimension p")->required();
  simulate->add_option("--iters", siters, "Iteration count")->required();
  simulate->add_option("--seed", sseed, "Seed for the two starting points");
  simulate->add_option("--out", sout, "Output CSV path (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (rates->parsed()) return cmd_rates(kmin, kmax, points, rates_out);
    if (certify->parsed())
      return cmd_certify(cm, cL, cbeta, ctau, ob->count() > 0, ot->count() > 0);
    if (search->parsed()) return cmd_search(skappa, srule, stol, strace);
    if (simulate->parsed()) return cmd_simulate(sfun, sm, sL, sdim, siters, sseed, sout);
  } catch (const UsageError& ex) {
    std::cerr << ex.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& ex) {
    std::cerr << ex.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
