#include "namcert/sdpsearch.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "namcert/model.hpp"

namespace namcert {

namespace {

constexpr double kEps = 1e-9;    // strict-feasibility margin on P
constexpr double kDelta = 1e-9;  // slack on H
constexpr int kMaxIters = 50000;
constexpr double kGapTol = 1e-9;
constexpr double kInitRadius = 100.0;

// orthonormal vectorizations: <A,B>_F = svec(A).svec(B)
const double kSqrt2 = std::sqrt(2.0);

std::array<double, 6> svec3(const SymMat& s) {
  return {s(0, 0), kSqrt2 * s(0, 1), kSqrt2 * s(0, 2),
          s(1, 1), kSqrt2 * s(1, 2), s(2, 2)};
}

SymMat smat3(const std::array<double, 6>& v) {
  SymMat s(3);
  s.at(0, 0) = v[0];
  s.at(0, 1) = v[1] / kSqrt2;
  s.at(0, 2) = v[2] / kSqrt2;
  s.at(1, 1) = v[3];
  s.at(1, 2) = v[4] / kSqrt2;
  s.at(2, 2) = v[5];
  return s;
}

std::array<double, 10> svec4(const SymMat& s) {
  std::array<double, 10> v;
  int k = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = i; j < 4; ++j) v[k++] = (i == j ? 1.0 : kSqrt2) * s(i, j);
  return v;
}

SymMat smat4(const std::array<double, 10>& v) {
  SymMat s(4);
  int k = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = i; j < 4; ++j) {
      s.at(i, j) = (i == j ? v[k] : v[k] / kSqrt2);
      ++k;
    }
  return s;
}

// affine map p -> svec(H(P)) precomputed per (kappa, beta, tau)
struct AffineMap {
  std::array<std::array<double, 6>, 10> G{};  // 10x6
  std::array<double, 10> h0{};
};

AffineMap build_map(const FeasibilityProblem& prob) {
  const ConditionClass cond(1.0 / prob.kappa, 1.0);
  const AlgoParams params(1.0, prob.beta);
  const StateSpaceRealization r = build_realization(cond, params, prob.tau);

  AffineMap map;
  map.h0 = svec4(assemble_H(r, SymMat::zero(3), 1.0, prob.tau));
  for (int k = 0; k < 6; ++k) {
    std::array<double, 6> e{};
    e[k] = 1.0;
    const std::array<double, 10> col = svec4(assemble_H(r, smat3(e), 1.0, prob.tau));
    for (int i = 0; i < 10; ++i) map.G[i][k] = col[i] - map.h0[i];
  }
  return map;
}

struct MarginEval {
  double value;
  std::array<double, 6> supergradient;
};

// f(p) = min(lambda_min(H(p)) + delta, lambda_min(P) - eps) with a
// supergradient from the minimizing block's bottom eigenvector
MarginEval eval_margin(const AffineMap& map, const std::array<double, 6>& p) {
  std::array<double, 10> q = map.h0;
  for (int i = 0; i < 10; ++i)
    for (int k = 0; k < 6; ++k) q[i] += map.G[i][k] * p[k];

  const EigSym eh = eig_sym(smat4(q));
  const EigSym ep = eig_sym(smat3(p));
  const double fH = eh.values[0] + kDelta;
  const double fP = ep.values[0] - kEps;

  MarginEval out;
  if (fH <= fP) {
    out.value = fH;
    SymMat vv(4);
    for (int i = 0; i < 4; ++i)
      for (int j = i; j < 4; ++j) vv.at(i, j) = eh.vectors[0][i] * eh.vectors[0][j];
    const std::array<double, 10> z = svec4(vv);
    for (int k = 0; k < 6; ++k) {
      double g = 0.0;
      for (int i = 0; i < 10; ++i) g += map.G[i][k] * z[i];
      out.supergradient[k] = g;
    }
  } else {
    out.value = fP;
    SymMat vv(3);
    for (int i = 0; i < 3; ++i)
      for (int j = i; j < 3; ++j) vv.at(i, j) = ep.vectors[0][i] * ep.vectors[0][j];
    out.supergradient = svec3(vv);
  }
  return out;
}

}  // namespace

FeasibilityResult feasibility(const FeasibilityProblem& prob) {
  if (!(prob.kappa > 1.0)) throw std::invalid_argument("feasibility requires kappa > 1");
  if (!(prob.beta > 0.0)) throw std::invalid_argument("feasibility requires beta > 0");
  if (!(prob.tau > 0.0 && prob.tau < 1.0))
    throw std::invalid_argument("feasibility requires tau in (0, 1)");

  const AffineMap map = build_map(prob);
  const int n = 6;

  std::array<double, 6> c = svec3(SymMat::identity(3));
  double Q[6][6] = {};
  for (int i = 0; i < n; ++i) Q[i][i] = kInitRadius * kInitRadius;

  FeasibilityResult res;
  double f_best = -std::numeric_limits<double>::infinity();
  std::array<double, 6> p_best = c;
  double ub = std::numeric_limits<double>::infinity();

  for (int it = 1; it <= kMaxIters; ++it) {
    res.iterations = it;
    const MarginEval ev = eval_margin(map, c);
    if (ev.value > f_best) {
      f_best = ev.value;
      p_best = c;
      if (f_best >= 0.0) {
        res.verdict = Verdict::Feasible;
        res.P = smat3(p_best);
        res.margin = f_best;
        return res;
      }
    }

    double Qg[6];
    double gQg = 0.0;
    for (int i = 0; i < n; ++i) {
      double v = 0.0;
      for (int j = 0; j < n; ++j) v += Q[i][j] * ev.supergradient[j];
      Qg[i] = v;
      gQg += v * ev.supergradient[i];
    }
    if (!(gQg > 0.0)) break;  // ellipsoid degenerated to numerical rank loss
    const double sq = std::sqrt(gQg);

    // concavity: max over the current ellipsoid of f is at most f(c) + sq
    ub = std::min(ub, ev.value + sq);
    if (ub < 0.0) {
      res.verdict = Verdict::Infeasible;
      res.P = smat3(p_best);
      res.margin = ub;
      return res;
    }
    if (ub - f_best < kGapTol) break;

    // central-cut update toward the supergradient halfspace
    for (int i = 0; i < n; ++i) c[i] += Qg[i] / (sq * (n + 1.0));
    const double nn = static_cast<double>(n) * n;
    const double shrink = nn / (nn - 1.0);
    const double rank1 = 2.0 / ((n + 1.0) * gQg);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) Q[i][j] = shrink * (Q[i][j] - rank1 * Qg[i] * Qg[j]);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        const double s = 0.5 * (Q[i][j] + Q[j][i]);
        Q[i][j] = Q[j][i] = s;
      }
  }

  res.verdict = Verdict::Indeterminate;
  res.P = smat3(p_best);
  res.margin = f_best;
  return res;
}

SearchResult bisect_tau(double kappa, double beta, double tol_tau) {
  if (!(kappa > 1.0)) throw std::invalid_argument("bisect_tau requires kappa > 1");
  if (!(beta > 0.0)) throw std::invalid_argument("bisect_tau requires beta > 0");
  if (!(tol_tau >= 1e-6)) throw std::invalid_argument("bisect_tau requires tol_tau >= 1e-6");

  SearchResult out;
  out.kappa = kappa;
  out.beta = beta;

  double lo = 0.0, hi = 1.0;
  bool found = false;
  int step = 0;
  double tau = 0.5;  // first probe
  while (hi - lo > tol_tau) {
    const FeasibilityResult fr = feasibility({kappa, beta, tau});
    ++out.iterations;
    out.trace.push_back({step++, tau, fr.verdict, fr.margin});
    if (fr.verdict == Verdict::Feasible) {
      hi = tau;
      found = true;
      out.P_star = fr.P;
      out.residual = fr.margin;
    } else {
      lo = tau;  // indeterminate counts as infeasible for bracketing
    }
    tau = 0.5 * (lo + hi);
  }

  if (!found) {
    const double probe = 1.0 - 1e-9;
    const FeasibilityResult fr = feasibility({kappa, beta, probe});
    ++out.iterations;
    out.trace.push_back({step++, probe, fr.verdict, fr.margin});
    if (fr.verdict != Verdict::Feasible) {
      out.no_rate_found = true;
      out.bracket_lo = lo;
      out.bracket_hi = 1.0;
      return out;
    }
    hi = probe;
    out.P_star = fr.P;
    out.residual = fr.margin;
  }

  out.tau_star = hi;
  out.feasible_at_tau_star = true;
  out.bracket_lo = lo;
  out.bracket_hi = hi;

  // post-hoc straddle re-check of both endpoints
  const FeasibilityResult rhi = feasibility({kappa, beta, hi});
  if (rhi.verdict != Verdict::Feasible) out.bracket_anomaly = true;
  if (lo > 0.0) {
    const FeasibilityResult rlo = feasibility({kappa, beta, lo});
    if (rlo.verdict == Verdict::Feasible) out.bracket_anomaly = true;
  }
  return out;
}

std::vector<SearchResult> sweep(const std::vector<double>& kappa_grid, BetaRule rule,
                                double tol_tau) {
  if (kappa_grid.empty()) throw std::invalid_argument("sweep requires a nonempty grid");
  std::vector<SearchResult> results;
  results.reserve(kappa_grid.size());
  for (const double k : kappa_grid) {
    try {
      const double b = rule == BetaRule::Optimal ? optimal_tuning(k).beta : classic_beta(k);
      results.push_back(bisect_tau(k, b, tol_tau));
    } catch (const std::exception& ex) {
      SearchResult bad;
      bad.kappa = k;
      bad.error = ex.what();
      results.push_back(std::move(bad));
    }
  }
  return results;
}

std::vector<SearchResult> sweep(const std::vector<double>& kappa_grid,
                                const std::vector<double>& betas, double tol_tau) {
  if (kappa_grid.empty()) throw std::invalid_argument("sweep requires a nonempty grid");
  if (betas.size() != kappa_grid.size())
    throw std::invalid_argument("sweep: beta list must match the grid");
  std::vector<SearchResult> results;
  results.reserve(kappa_grid.size());
  for (std::size_t i = 0; i < kappa_grid.size(); ++i) {
    try {
      results.push_back(bisect_tau(kappa_grid[i], betas[i], tol_tau));
    } catch (const std::exception& ex) {
      SearchResult bad;
      bad.kappa = kappa_grid[i];
      bad.beta = betas[i];
      bad.error = ex.what();
      results.push_back(std::move(bad));
    }
  }
  return results;
}

}  // namespace namcert
