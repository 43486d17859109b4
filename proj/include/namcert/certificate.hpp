#pragma once

#include <array>
#include <vector>

#include "namcert/linalg.hpp"
#include "namcert/model.hpp"

namespace namcert {

/// A rate certificate candidate: 3x3 matrix P, multiplier lambda >= 0,
/// rate tau with 0 < rho <= tau < 1, and omega = tau^2 as stored.
struct Certificate {
  SymMat P{3};
  double lambda = 1.0;
  double tau = 0.0;
  double rho = 0.0;
  double omega = 0.0;
};

/// All residuals and verdicts produced by verify_certificate. Verdicts are
/// deterministic functions of the residuals and tol_abs = 1e-8*max(1,||H||_inf).
struct VerificationReport {
  double min_eig_P = 0.0;
  double min_eig_H = 0.0;
  double schur_h3_min_eig = 0.0;
  double schur_range_residual = 0.0;   // max-abs entry of (I - H3 H3+) H2^T
  double schur_complement_min_eig = 0.0;
  double det_h3 = 0.0;
  std::array<double, 3> sylvester_minors{};  // minors of the permuted P: f, df-e^2, det
  double kappa_P = 0.0;
  double tol_abs = 0.0;

  bool pass_P = false;
  bool pass_H = false;
  bool pass_schur_h3 = false;
  bool pass_schur_range = false;
  bool pass_schur_complement = false;
  bool pass_sylvester = false;

  bool schur_pass() const { return pass_schur_h3 && pass_schur_range && pass_schur_complement; }
  bool pass() const { return pass_P && pass_H; }
};

/// Negated LMI matrix
///   H = -( [A^T P A - tau^2 P,  A^T P B;  B^T P A,  B^T P B]
///          + lambda [C D]^T M [C D] ),   M = [0 1; 1 0],
/// symmetrized after assembly. H >= 0 is the certificate condition.
/// Accepts tau in (0, 1]; lambda >= 0.
SymMat assemble_H(const StateSpaceRealization& r, const SymMat& P, double lambda,
                  double tau);

/// Closed-form certificate matrix P(kappa, beta, omega), entries (s = 1/kappa):
///   a = -(1/b+2)w + 2(b+2) + b(s-1)/w - 2(b+1)s
///   b = ((2b+1)(s-1) + w)/2
///   c = b - w(s+w-1)/(2b(s-1)) - (b+1)s - w + 1
///   d = (1-s)b,  e = w - (1-s)b,  f = w^2/(b(1-s))
/// Requires kappa > 1, beta > 0, omega in (0,1).
SymMat closed_form_P(double kappa, double beta, double omega);

/// Real roots (ascending, with multiplicity) of the cubic rate equation
///   k^2 w^3 + 2k(k-1)(1+2b) w^2
///   + [(k-1)^2(1-4b^2) + 4(k-1)(1-3k)b] w + 8(k-1)^2 b^2 = 0.
/// Solved in closed form (trigonometric branch for three real roots), then
/// one guarded Newton polish per root.
std::vector<double> rate_cubic_roots(double kappa, double beta);

struct Tuning {
  double beta;
  double tau;
  double omega;
};

/// Momentum that minimizes the certified rate, and the rate itself:
///   beta = (2k - sqrt(2k-1) - 1) / (2(k + sqrt(2k-1)))
///   tau  = sqrt(1 - sqrt(2k-1)/k),  omega = tau^2.
/// Requires kappa >= 1 (all three are 0 at kappa = 1).
Tuning optimal_tuning(double kappa);

/// Boundary omega* = 1 - sqrt(2k-1)/k where the discriminant of the
/// beta-quadratic changes sign. Requires kappa > 1.
double discriminant_threshold(double kappa);

/// Evaluates every certificate condition numerically: lambda_min(P) > 0,
/// lambda_min(H) against -tol_abs, the three Schur-complement conditions for
/// the 2x2 block split of H, det(H3), the Sylvester minors of the permuted P,
/// and kappa_P. Always returns a report; failures live in the verdicts.
VerificationReport verify_certificate(const ConditionClass& cond,
                                      const AlgoParams& params,
                                      const Certificate& cert);

struct CertifiedRate {
  AlgoParams params{1.0, 0.0};
  Certificate cert;
  VerificationReport report;
  double tau = 0.0;
  bool ok = false;
};

/// Builds and verifies the closed-form certificate for (m, L): alpha = 1/L,
/// beta from the optimal tuning, construction in normalized units
/// (L = alpha = lambda = 1, rho = tau), rate valid for the original scale by
/// the f -> f/L rescaling. kappa = 1 is the exact-minimizer edge case and
/// returns tau = 0 with a trivial certificate. Verification failure is
/// propagated in `ok`, never silently.
CertifiedRate certified_rate(const ConditionClass& cond);

/// Certifies an explicit (beta, tau) point instead of the optimum; the
/// closed-form P at omega = tau^2 is still used, so the result may
/// legitimately fail verification. Requires kappa > 1.
CertifiedRate certify_point(const ConditionClass& cond, double beta, double tau);

}  // namespace namcert
