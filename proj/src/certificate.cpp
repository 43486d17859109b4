#include "namcert/certificate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace namcert {

namespace {

// coefficients of the rate cubic in w, highest degree first
std::array<double, 4> cubic_coefficients(double k, double b) {
  const double km1 = k - 1.0;
  return {k * k,
          2.0 * k * km1 * (1.0 + 2.0 * b),
          km1 * km1 * (1.0 - 4.0 * b * b) + 4.0 * km1 * (1.0 - 3.0 * k) * b,
          8.0 * km1 * km1 * b * b};
}

double poly_eval(const std::array<double, 4>& c, double w) {
  return ((c[0] * w + c[1]) * w + c[2]) * w + c[3];
}

double poly_deriv(const std::array<double, 4>& c, double w) {
  return (3.0 * c[0] * w + 2.0 * c[1]) * w + c[2];
}

// real roots of c0 x^2 + c1 x + c2 (stable form), appended to out
void quadratic_roots(double c0, double c1, double c2, std::vector<double>& out) {
  if (c0 == 0.0) {
    if (c1 != 0.0) out.push_back(-c2 / c1);
    return;
  }
  const double disc = c1 * c1 - 4.0 * c0 * c2;
  if (disc < 0.0) return;
  const double sq = std::sqrt(disc);
  const double q = -0.5 * (c1 + (c1 >= 0.0 ? sq : -sq));
  if (q != 0.0) {
    out.push_back(q / c0);
    out.push_back(c2 / q);
  } else {
    out.push_back(0.0);
    out.push_back(-c1 / c0);
  }
}

}  // namespace

SymMat assemble_H(const StateSpaceRealization& r, const SymMat& P, double lambda,
                  double tau) {
  if (!(lambda >= 0.0)) throw std::invalid_argument("assemble_H requires lambda >= 0");
  if (!(tau > 0.0 && tau <= 1.0))
    throw std::invalid_argument("assemble_H requires tau in (0, 1]");
  if (P.order() != 3) throw std::invalid_argument("assemble_H requires a 3x3 P");

  Mat A(3, 3), B(3, 1), E(2, 4);
  for (int i = 0; i < 3; ++i) {
    B.at(i, 0) = r.B[i];
    for (int j = 0; j < 3; ++j) A.at(i, j) = r.A[i][j];
  }
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 3; ++j) E.at(i, j) = r.C[i][j];
    E.at(i, 3) = r.D[i];
  }

  const Mat Pm = Mat::from_sym(P);
  const Mat PA = matmul(Pm, A);
  const Mat PB = matmul(Pm, B);
  const Mat AtPA = matmul(transpose(A), PA);
  const Mat AtPB = matmul(transpose(A), PB);
  const Mat BtPB = matmul(transpose(B), PB);

  // lambda [C D]^T M [C D] with M = [0 1; 1 0]: rows r0, r1 of E give
  // K = r0^T r1 + r1^T r0.
  double G[4][4] = {};
  for (int i = 0; i < 3; ++i) {
    G[i][3] = AtPB(i, 0);
    G[3][i] = AtPB(i, 0);
    for (int j = 0; j < 3; ++j) G[i][j] = AtPA(i, j) - tau * tau * P(i, j);
  }
  G[3][3] = BtPB(0, 0);

  double H[4][4];
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      const double kij = E(0, i) * E(1, j) + E(1, i) * E(0, j);
      H[i][j] = -(G[i][j] + lambda * kij);
    }
  // symmetrize against roundoff in the two product routes
  double S[16];
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) S[i * 4 + j] = 0.5 * (H[i][j] + H[j][i]);
  return SymMat::from_full(4, S);
}

SymMat closed_form_P(double kappa, double beta, double omega) {
  if (!(kappa > 1.0)) throw std::invalid_argument("closed_form_P requires kappa > 1");
  if (!(beta > 0.0)) throw std::invalid_argument("closed_form_P requires beta > 0");
  if (!(omega > 0.0 && omega < 1.0))
    throw std::invalid_argument("closed_form_P requires omega in (0, 1)");

  const double s = 1.0 / kappa;
  const double w = omega;
  const double a = -(1.0 / beta + 2.0) * w + 2.0 * (beta + 2.0) + beta * (s - 1.0) / w -
                   2.0 * (beta + 1.0) * s;
  const double b = 0.5 * ((2.0 * beta + 1.0) * (s - 1.0) + w);
  const double c = beta - w * (s + w - 1.0) / (2.0 * beta * (s - 1.0)) -
                   (beta + 1.0) * s - w + 1.0;
  const double d = (1.0 - s) * beta;
  const double e = w - (1.0 - s) * beta;
  const double f = w * w / (beta - beta * s);

  SymMat P(3);
  P.at(0, 0) = a;
  P.at(0, 1) = b;
  P.at(0, 2) = c;
  P.at(1, 1) = d;
  P.at(1, 2) = e;
  P.at(2, 2) = f;
  return P;
}

std::vector<double> rate_cubic_roots(double kappa, double beta) {
  if (!(kappa > 1.0)) throw std::invalid_argument("rate_cubic_roots requires kappa > 1");
  if (!(beta > 0.0)) throw std::invalid_argument("rate_cubic_roots requires beta > 0");

  const std::array<double, 4> c = cubic_coefficients(kappa, beta);
  std::vector<double> roots;

  const double scale = std::max({std::abs(c[1]), std::abs(c[2]), std::abs(c[3])});
  if (std::abs(c[0]) <= 1e-300 * std::max(1.0, scale)) {
    // degenerate leading coefficient: fall back to the quadratic
    quadratic_roots(c[1], c[2], c[3], roots);
  } else {
    // depressed form t^3 + p t + q with w = t - c1/(3 c0)
    const double a1 = c[1] / c[0];
    const double a2 = c[2] / c[0];
    const double a3 = c[3] / c[0];
    const double shift = a1 / 3.0;
    const double p = a2 - a1 * a1 / 3.0;
    const double q = a3 - a1 * a2 / 3.0 + 2.0 * a1 * a1 * a1 / 27.0;

    if (p == 0.0 && q == 0.0) {
      roots.assign(3, -shift);
    } else {
      const double disc = -4.0 * p * p * p - 27.0 * q * q;
      if (disc >= 0.0) {
        // three real roots, trigonometric branch
        const double rp = std::sqrt(-p / 3.0);
        double arg = 3.0 * q / (2.0 * p) / rp;  // = (3q)/(2p) sqrt(-3/p)
        arg = std::clamp(arg, -1.0, 1.0);
        const double theta = std::acos(arg);
        const double two_pi_third = 2.0 * std::acos(-1.0) / 3.0;
        for (int k = 0; k < 3; ++k) {
          const double t = 2.0 * rp * std::cos(theta / 3.0 - two_pi_third * k);
          roots.push_back(t - shift);
        }
      } else {
        // single real root via the hyperbolic/Cardano branch
        double t;
        if (p < 0.0) {
          const double rp = std::sqrt(-p / 3.0);
          const double z = -3.0 * std::abs(q) / (2.0 * p) / rp;
          t = -2.0 * (q >= 0.0 ? 1.0 : -1.0) * rp * std::cosh(std::acosh(z) / 3.0);
        } else {
          const double rp = std::sqrt(p / 3.0);
          const double z = 3.0 * q / (2.0 * p) / rp;
          t = -2.0 * rp * std::sinh(std::asinh(z) / 3.0);
        }
        roots.push_back(t - shift);
      }
    }
  }

  // one guarded Newton polish per root; keep whichever point has the smaller
  // residual so the step can never make a root worse
  for (double& w : roots) {
    const double g = poly_eval(c, w);
    const double dg = poly_deriv(c, w);
    if (dg == 0.0) continue;
    const double w2 = w - g / dg;
    if (std::isfinite(w2) && std::abs(poly_eval(c, w2)) < std::abs(g)) w = w2;
  }

  std::sort(roots.begin(), roots.end());
  return roots;
}

Tuning optimal_tuning(double kappa) {
  if (!(kappa >= 1.0)) throw std::invalid_argument("optimal_tuning requires kappa >= 1");
  const double root = std::sqrt(2.0 * kappa - 1.0);
  // beta = (2k - 1 - root)/(2(k + root)) with 2k - 1 - root = root(root - 1)
  // and root - 1 = 2(k-1)/(root+1); rearranged to stay exact near kappa = 1
  const double beta = root * (kappa - 1.0) / ((root + 1.0) * (kappa + root));
  const double omega = (kappa - 1.0) * (kappa - 1.0) / (kappa * (kappa + root));
  return {beta, std::sqrt(omega), omega};
}

double discriminant_threshold(double kappa) {
  if (!(kappa > 1.0))
    throw std::invalid_argument("discriminant_threshold requires kappa > 1");
  const double root = std::sqrt(2.0 * kappa - 1.0);
  return (kappa - 1.0) * (kappa - 1.0) / (kappa * (kappa + root));
}

VerificationReport verify_certificate(const ConditionClass& cond,
                                      const AlgoParams& params,
                                      const Certificate& cert) {
  const StateSpaceRealization r = build_realization(cond, params, cert.rho);
  const SymMat H = assemble_H(r, cert.P, cert.lambda, cert.tau);

  VerificationReport rep;
  rep.tol_abs = 1e-8 * std::max(1.0, H.norm_inf());

  rep.min_eig_P = psd_min_eig(cert.P);
  rep.pass_P = rep.min_eig_P > 0.0;

  rep.min_eig_H = psd_min_eig(H);
  rep.pass_H = rep.min_eig_H >= -rep.tol_abs;

  // 2x2 block split H = [H1 H2; H2^T H3]
  SymMat H1(2), H3(2);
  Mat H2(2, 2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      if (j >= i) {
        H1.at(i, j) = H(i, j);
        H3.at(i, j) = H(i + 2, j + 2);
      }
      H2.at(i, j) = H(i, j + 2);
    }

  rep.schur_h3_min_eig = psd_min_eig(H3);
  rep.pass_schur_h3 = rep.schur_h3_min_eig >= -rep.tol_abs;
  rep.det_h3 = H3(0, 0) * H3(1, 1) - H3(0, 1) * H3(0, 1);

  const SymMat H3p = pinv2(H3);
  const Mat H3pm = Mat::from_sym(H3p);
  const Mat H3m = Mat::from_sym(H3);

  // range condition (I - H3 H3+) H2^T = 0
  const Mat proj = matmul(H3m, H3pm);
  Mat range(2, 2);
  const Mat H2t = transpose(H2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      double v = H2t(i, j);
      for (int k = 0; k < 2; ++k) v -= proj(i, k) * H2t(k, j);
      range.at(i, j) = v;
    }
  rep.schur_range_residual = 0.0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      rep.schur_range_residual = std::max(rep.schur_range_residual, std::abs(range(i, j)));
  rep.pass_schur_range = rep.schur_range_residual <= rep.tol_abs;

  // Schur complement H1 - H2 H3+ H2^T
  const Mat compl_full = matmul(H2, matmul(H3pm, H2t));
  SymMat schur(2);
  for (int i = 0; i < 2; ++i)
    for (int j = i; j < 2; ++j)
      schur.at(i, j) = H1(i, j) - 0.5 * (compl_full(i, j) + compl_full(j, i));
  rep.schur_complement_min_eig = psd_min_eig(schur);
  rep.pass_schur_complement = rep.schur_complement_min_eig >= -rep.tol_abs;

  // Sylvester minors of P with rows/columns reversed (first/last swapped)
  SymMat Pperm(3);
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j) Pperm.at(i, j) = cert.P(2 - i, 2 - j);
  const std::vector<double> minors = leading_minors(Pperm);
  for (int k = 0; k < 3; ++k) rep.sylvester_minors[k] = minors[k];
  rep.pass_sylvester =
      minors[0] > 0.0 && minors[1] > 0.0 && minors[2] > 0.0;

  const EigSym pe = eig_sym(cert.P);
  double sv_min = std::numeric_limits<double>::infinity();
  double sv_max = 0.0;
  for (int k = 0; k < 3; ++k) {
    sv_min = std::min(sv_min, std::abs(pe.values[k]));
    sv_max = std::max(sv_max, std::abs(pe.values[k]));
  }
  rep.kappa_P = sv_min > 0.0 ? sv_max / sv_min
                             : std::numeric_limits<double>::infinity();
  return rep;
}

CertifiedRate certified_rate(const ConditionClass& cond) {
  const double kappa = cond.kappa();
  CertifiedRate out;
  out.params = AlgoParams(1.0 / cond.L, 0.0);

  if (kappa == 1.0) {
    // exact-minimizer edge case: one step lands on x*, rate 0
    out.cert.P = SymMat::identity(3);
    out.cert.lambda = 1.0;
    out.cert.tau = out.cert.rho = out.cert.omega = 0.0;
    out.tau = 0.0;
    out.report.min_eig_P = 1.0;
    out.report.kappa_P = 1.0;
    out.report.sylvester_minors = {1.0, 1.0, 1.0};
    out.report.tol_abs = 1e-8;
    out.report.pass_P = out.report.pass_H = out.report.pass_schur_h3 =
        out.report.pass_schur_range = out.report.pass_schur_complement =
            out.report.pass_sylvester = true;
    out.ok = true;
    return out;
  }

  const Tuning t = optimal_tuning(kappa);
  out.params = AlgoParams(1.0 / cond.L, t.beta);
  out.cert.P = closed_form_P(kappa, t.beta, t.omega);
  out.cert.lambda = 1.0;
  out.cert.tau = t.tau;
  out.cert.rho = t.tau;
  out.cert.omega = t.omega;
  out.tau = t.tau;

  // construction and verification in normalized units (L = alpha = 1);
  // the rate transfers to the original scale by the f -> f/L argument
  const ConditionClass normalized(1.0 / kappa, 1.0);
  const AlgoParams norm_params(1.0, t.beta);
  out.report = verify_certificate(normalized, norm_params, out.cert);
  out.ok = out.report.pass();
  return out;
}

CertifiedRate certify_point(const ConditionClass& cond, double beta, double tau) {
  const double kappa = cond.kappa();
  if (!(kappa > 1.0)) throw std::invalid_argument("certify_point requires kappa > 1");
  if (!(tau > 0.0 && tau < 1.0))
    throw std::invalid_argument("certify_point requires tau in (0, 1)");

  CertifiedRate out;
  out.params = AlgoParams(1.0 / cond.L, beta);
  out.cert.P = closed_form_P(kappa, beta, tau * tau);
  out.cert.lambda = 1.0;
  out.cert.tau = tau;
  out.cert.rho = tau;
  out.cert.omega = tau * tau;
  out.tau = tau;

  const ConditionClass normalized(1.0 / kappa, 1.0);
  const AlgoParams norm_params(1.0, beta);
  out.report = verify_certificate(normalized, norm_params, out.cert);
  out.ok = out.report.pass();
  return out;
}

}  // namespace namcert
