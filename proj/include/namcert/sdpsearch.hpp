#pragma once

#include <string>
#include <vector>

#include "namcert/certificate.hpp"
#include "namcert/linalg.hpp"

namespace namcert {

/// LMI feasibility subproblem at fixed normalization lambda = 1, rho = tau,
/// alpha = L = 1: does a P exist with P >= eps*I and H(P) >= -delta*I?
struct FeasibilityProblem {
  double kappa;
  double beta;
  double tau;  // in (0, 1)
};

enum class Verdict { Feasible, Infeasible, Indeterminate };

/// margin semantics: Feasible -> achieved margin of the returned witness
/// (>= 0); Infeasible -> certified upper bound on the best achievable margin
/// (< 0); Indeterminate -> best margin found when the bound gap closed below
/// resolution or the iteration cap was hit.
struct FeasibilityResult {
  Verdict verdict = Verdict::Indeterminate;
  SymMat P{3};
  double margin = 0.0;
  int iterations = 0;
};

/// Decides the affine-PSD system over the 6 free entries of P with a
/// deterministic central-cut ellipsoid method maximizing
///   f(P) = min(lambda_min(H(P)) + delta, lambda_min(P) - eps),
/// eps = delta = 1e-9. Feasible as soon as f >= 0 (P is the witness);
/// infeasible when the ellipsoid's certified upper bound on max f drops
/// below 0; indeterminate when the bound gap falls below 1e-9 or after
/// 50,000 iterations. The affine map P -> H(P) is precomputed per
/// (kappa, beta, tau). Bit-for-bit deterministic.
FeasibilityResult feasibility(const FeasibilityProblem& prob);

struct TraceEntry {
  int step;
  double tau;
  Verdict verdict;
  double margin;
};

struct SearchResult {
  double kappa = 0.0;
  double beta = 0.0;
  double tau_star = 1.0;
  SymMat P_star{3};
  bool feasible_at_tau_star = false;
  int iterations = 0;   // feasibility solves performed
  double residual = 0.0;  // margin at tau_star
  double bracket_lo = 0.0;
  double bracket_hi = 1.0;
  bool no_rate_found = false;
  bool bracket_anomaly = false;  // post-hoc endpoint re-check contradiction
  std::vector<TraceEntry> trace;
  std::string error;  // set by sweep() when a grid entry throws
};

/// Bisects tau over [0, 1), first probe tau = 0.5, until the bracket width
/// is <= tol_tau; indeterminate counts as infeasible for bracketing but is
/// visible in the trace. If no feasible tau was met, probes tau = 1 - 1e-9
/// and reports no_rate_found when even that is infeasible. Both bracket
/// endpoints are re-checked post hoc. Requires kappa > 1, beta > 0,
/// tol_tau >= 1e-6.
SearchResult bisect_tau(double kappa, double beta, double tol_tau);

enum class BetaRule { Optimal, Nesterov };

/// One bisection per grid entry; failures are recorded per entry and the
/// sweep continues. The grid must be nonempty with every kappa > 1.
std::vector<SearchResult> sweep(const std::vector<double>& kappa_grid, BetaRule rule,
                                double tol_tau);
std::vector<SearchResult> sweep(const std::vector<double>& kappa_grid,
                                const std::vector<double>& betas, double tol_tau);

}  // namespace namcert
