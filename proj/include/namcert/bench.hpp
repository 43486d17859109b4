#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "namcert/certificate.hpp"
#include "namcert/model.hpp"
#include "namcert/sdpsearch.hpp"

namespace namcert {

/// A test instance with declared (m, L), a gradient oracle and an
/// analytically known minimizer.
struct TestFunction {
  std::string name;
  int dim = 1;
  double m = 1.0;
  double L = 1.0;
  GradientFn grad;
  std::vector<double> minimizer;
};

/// f(x) = 1/2 sum_i spectrum[i] x_i^2, minimizer 0. The spectrum must have
/// one entry per coordinate, lie inside [m, L] and attain both endpoints.
TestFunction make_quadratic(int p, const std::vector<double>& spectrum, double m,
                            double L);

/// f(x) = (m/2)||x||^2 + (L-m) sum_i log cosh(x_i), gradient
/// m x + (L-m) tanh(x) componentwise, minimizer 0. Per-coordinate curvature
/// stays in [m, L]. Requires 0 < m < L.
TestFunction make_logcosh(int p, double m, double L);

struct TrajectoryRecord {
  std::vector<double> dist;  // d_t = ||x_t - x*|| for t = 0..T
  double C0 = 0.0;           // sqrt(d_0^2 + d_1^2)
  double tau_used = 0.0;
  double kappa_P = 0.0;
  double fitted_rate = 0.0;
  long bound_violations = 0;
};

class DivergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Runs the momentum iteration from the pair (x0, x1) for T-1 steps,
/// recording d_0..d_T, and checks every d_t against the certificate bound
/// sqrt(kappa_P) * C0 * tau^t with multiplicative slack 1 + 1e-8. The
/// observed rate is the least-squares slope of log d_t over the tail half of
/// the usable range; iterations with d_t < 1e-13 * d_0 are below the
/// floating-point floor and excluded. Throws DivergenceError when
/// d_t > 1e6 * max(d_0, d_1). Requires T >= 1 and a verified certificate.
TrajectoryRecord run_trajectory(const TestFunction& f, const AlgoParams& params,
                                const std::vector<double>& x0,
                                const std::vector<double>& x1, int T,
                                const Certificate& cert);

struct RateReportRow {
  double kappa = 1.0;
  double tau_bp = 0.0;
  double tau_lq = 0.0;
  double tau_nq = 0.0;
  double tau_ours = 0.0;
  double tau_ng = 0.0;
  double beta_classic = 0.0;
  double beta_opt = 0.0;
  std::optional<double> tau_sdp_optimal;
  std::optional<double> tau_sdp_nesterov;
};

/// Per-kappa table of all five reference rates plus the classical and
/// optimal momentum side by side; sdp_rules selects optional numerical tau*
/// columns computed by the bisection search (skipped at kappa = 1).
std::vector<RateReportRow> rate_table(const std::vector<double>& kappa_grid,
                                      const std::vector<BetaRule>& sdp_rules = {},
                                      double tol_tau = 1e-4);

}  // namespace namcert
