#include "namcert/bench.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace namcert {

namespace {

double dist_to(const std::vector<double>& x, const std::vector<double>& ref) {
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double d = x[i] - ref[i];
    s += d * d;
  }
  return std::sqrt(s);
}

}  // namespace

TestFunction make_quadratic(int p, const std::vector<double>& spectrum, double m,
                            double L) {
  if (p < 1) throw std::invalid_argument("make_quadratic requires p >= 1");
  if (!(m > 0.0) || !(L >= m))
    throw std::invalid_argument("make_quadratic requires 0 < m <= L");
  if (spectrum.size() != static_cast<std::size_t>(p))
    throw std::invalid_argument("make_quadratic: spectrum needs one entry per coordinate");
  bool has_m = false, has_L = false;
  for (const double lam : spectrum) {
    if (lam < m || lam > L)
      throw std::invalid_argument("make_quadratic: spectrum outside [m, L]");
    if (lam == m) has_m = true;
    if (lam == L) has_L = true;
  }
  if (!has_m || !has_L)
    throw std::invalid_argument("make_quadratic: spectrum must attain both m and L");

  TestFunction f;
  f.name = "quadratic";
  f.dim = p;
  f.m = m;
  f.L = L;
  f.minimizer.assign(p, 0.0);
  f.grad = [spectrum](const std::vector<double>& x) {
    std::vector<double> g(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) g[i] = spectrum[i] * x[i];
    return g;
  };
  return f;
}

TestFunction make_logcosh(int p, double m, double L) {
  if (p < 1) throw std::invalid_argument("make_logcosh requires p >= 1");
  if (!(m > 0.0) || !(L > m))
    throw std::invalid_argument("make_logcosh requires 0 < m < L");

  TestFunction f;
  f.name = "logcosh";
  f.dim = p;
  f.m = m;
  f.L = L;
  f.minimizer.assign(p, 0.0);
  f.grad = [m, L](const std::vector<double>& x) {
    std::vector<double> g(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) g[i] = m * x[i] + (L - m) * std::tanh(x[i]);
    return g;
  };
  return f;
}

TrajectoryRecord run_trajectory(const TestFunction& f, const AlgoParams& params,
                                const std::vector<double>& x0,
                                const std::vector<double>& x1, int T,
                                const Certificate& cert) {
  if (T < 1) throw std::invalid_argument("run_trajectory requires T >= 1");
  if (x0.size() != static_cast<std::size_t>(f.dim) || x1.size() != x0.size())
    throw std::invalid_argument("run_trajectory: start points must have the function dimension");

  TrajectoryRecord rec;
  rec.tau_used = cert.tau;
  {
    const EigSym pe = eig_sym(cert.P);
    double lo = std::abs(pe.values[0]);
    double hi = std::abs(pe.values[0]);
    for (int k = 1; k < 3; ++k) {
      lo = std::min(lo, std::abs(pe.values[k]));
      hi = std::max(hi, std::abs(pe.values[k]));
    }
    rec.kappa_P = lo > 0.0 ? hi / lo : std::numeric_limits<double>::infinity();
  }

  rec.dist.reserve(static_cast<std::size_t>(T) + 1);
  rec.dist.push_back(dist_to(x0, f.minimizer));
  rec.dist.push_back(dist_to(x1, f.minimizer));
  const double diverge_at = 1e6 * std::max(rec.dist[0], rec.dist[1]);

  std::vector<double> prev = x0;
  std::vector<double> cur = x1;
  for (int t = 2; t <= T; ++t) {
    NamStep step = nam_step(cur, prev, f.grad, params);
    prev = std::move(cur);
    cur = std::move(step.x_next);
    const double d = dist_to(cur, f.minimizer);
    if (diverge_at > 0.0 && d > diverge_at)
      throw DivergenceError("trajectory diverged at t=" + std::to_string(t) +
                            ": d=" + std::to_string(d));
    rec.dist.push_back(d);
  }

  rec.C0 = std::sqrt(rec.dist[0] * rec.dist[0] + rec.dist[1] * rec.dist[1]);
  const double lead = std::sqrt(rec.kappa_P) * rec.C0;
  double pow_tau = 1.0;
  for (int t = 0; t <= T; ++t) {
    if (rec.dist[t] > lead * pow_tau * (1.0 + 1e-8)) ++rec.bound_violations;
    pow_tau *= rec.tau_used;
  }

  // tail-window log-linear fit; the window shrinks when the trajectory
  // reaches the floating-point floor before T
  const double floor = 1e-13 * rec.dist[0];
  int t_hi = -1;
  for (int t = 0; t <= T; ++t)
    if (rec.dist[t] >= floor && rec.dist[t] > 0.0) t_hi = t;
  rec.fitted_rate = 0.0;
  if (t_hi >= 1) {
    const int t_lo = t_hi / 2;
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    long n = 0;
    for (int t = t_lo; t <= t_hi; ++t) {
      if (rec.dist[t] < floor || rec.dist[t] <= 0.0) continue;
      const double x = static_cast<double>(t);
      const double y = std::log(rec.dist[t]);
      sx += x;
      sy += y;
      sxx += x * x;
      sxy += x * y;
      ++n;
    }
    const double denom = n * sxx - sx * sx;
    if (n >= 2 && denom != 0.0) rec.fitted_rate = std::exp((n * sxy - sx * sy) / denom);
  }
  return rec;
}

std::vector<RateReportRow> rate_table(const std::vector<double>& kappa_grid,
                                      const std::vector<BetaRule>& sdp_rules,
                                      double tol_tau) {
  if (kappa_grid.empty()) throw std::invalid_argument("rate_table requires a nonempty grid");
  std::vector<RateReportRow> rows;
  rows.reserve(kappa_grid.size());
  for (const double k : kappa_grid) {
    RateReportRow row;
    row.kappa = k;
    row.tau_bp = reference_rate(RateKind::BP, k);
    row.tau_lq = reference_rate(RateKind::LQ, k);
    row.tau_nq = reference_rate(RateKind::NQ, k);
    row.tau_ours = reference_rate(RateKind::OURS, k);
    row.tau_ng = reference_rate(RateKind::NG, k);
    row.beta_classic = classic_beta(k);
    row.beta_opt = optimal_tuning(k).beta;
    for (const BetaRule rule : sdp_rules) {
      if (!(k > 1.0)) continue;
      const double b = rule == BetaRule::Optimal ? row.beta_opt : row.beta_classic;
      const SearchResult sr = bisect_tau(k, b, tol_tau);
      if (sr.no_rate_found) continue;
      if (rule == BetaRule::Optimal)
        row.tau_sdp_optimal = sr.tau_star;
      else
        row.tau_sdp_nesterov = sr.tau_star;
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace namcert
