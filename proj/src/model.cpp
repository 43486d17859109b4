#include "namcert/model.hpp"

#include <cmath>
#include <stdexcept>

namespace namcert {

ConditionClass::ConditionClass(double m_in, double L_in) : m(m_in), L(L_in) {
  if (!(m > 0.0) || !(L >= m) || !std::isfinite(L))
    throw std::invalid_argument("ConditionClass requires 0 < m <= L < inf");
}

AlgoParams::AlgoParams(double alpha_in, double beta_in) : alpha(alpha_in), beta(beta_in) {
  if (!(alpha > 0.0) || !std::isfinite(alpha))
    throw std::invalid_argument("AlgoParams requires alpha > 0");
  if (!(beta >= 0.0) || !std::isfinite(beta))
    throw std::invalid_argument("AlgoParams requires beta >= 0");
}

StateSpaceRealization build_realization(const ConditionClass& cond,
                                        const AlgoParams& params, double rho) {
  if (!(rho > 0.0)) throw std::invalid_argument("build_realization requires rho > 0");
  const double b = params.beta;
  const double a = params.alpha;
  const double L = cond.L;
  const double m = cond.m;

  StateSpaceRealization r;
  r.A = {{{b + 1.0, -b, 0.0}, {1.0, 0.0, 0.0}, {L * (-b - 1.0), b * L, 0.0}}};
  r.B = {-a, 0.0, 1.0};
  r.C = {{{L * (b + 1.0), -L * b, rho * rho}, {-m * (b + 1.0), m * b, 0.0}}};
  r.D = {-1.0, 1.0};
  r.rho = rho;
  return r;
}

NamStep nam_step(const std::vector<double>& x_t, const std::vector<double>& x_prev,
                 const GradientFn& grad, const AlgoParams& params) {
  const std::size_t p = x_t.size();
  if (p == 0 || x_prev.size() != p)
    throw std::invalid_argument("nam_step: vectors must share dimension p >= 1");

  NamStep out;
  out.y.resize(p);
  for (std::size_t i = 0; i < p; ++i)
    out.y[i] = (1.0 + params.beta) * x_t[i] - params.beta * x_prev[i];

  const std::vector<double> g = grad(out.y);
  if (g.size() != p) throw std::invalid_argument("nam_step: gradient dimension mismatch");

  out.x_next.resize(p);
  for (std::size_t i = 0; i < p; ++i) out.x_next[i] = out.y[i] - params.alpha * g[i];
  return out;
}

std::vector<std::vector<double>> simulate_state_space(
    const StateSpaceRealization& r, const GradientFn& grad,
    const std::vector<double>& xi0, int T) {
  if (T < 0) throw std::invalid_argument("simulate_state_space: T must be >= 0");
  if (xi0.empty() || xi0.size() % 3 != 0)
    throw std::invalid_argument("simulate_state_space: state dimension must be 3p, p >= 1");
  const std::size_t p = xi0.size() / 3;

  std::vector<std::vector<double>> traj;
  traj.reserve(static_cast<std::size_t>(T) + 1);
  traj.push_back(xi0);

  std::vector<double> probe(p), u, next(3 * p);
  for (int t = 0; t < T; ++t) {
    const std::vector<double>& xi = traj.back();
    // feedback input: gradient of the first-row probe (the u-free part of row 1)
    for (std::size_t i = 0; i < p; ++i)
      probe[i] = r.A[0][0] * xi[i] + r.A[0][1] * xi[p + i] + r.A[0][2] * xi[2 * p + i];
    u = grad(probe);
    if (u.size() != p)
      throw std::invalid_argument("simulate_state_space: gradient dimension mismatch");

    for (int blk = 0; blk < 3; ++blk)
      for (std::size_t i = 0; i < p; ++i)
        next[blk * p + i] = r.A[blk][0] * xi[i] + r.A[blk][1] * xi[p + i] +
                            r.A[blk][2] * xi[2 * p + i] + r.B[blk] * u[i];
    traj.push_back(next);
  }
  return traj;
}

double reference_rate(RateKind kind, double kappa) {
  if (!(kappa >= 1.0)) throw std::invalid_argument("reference_rate requires kappa >= 1");
  switch (kind) {
    case RateKind::NG:
      return std::sqrt(1.0 - 1.0 / std::sqrt(kappa));
    case RateKind::NQ:
      return 1.0 - 1.0 / std::sqrt(kappa);
    case RateKind::BP:
      return 1.0 - 2.0 / std::sqrt(kappa + 1.0);
    case RateKind::LQ:
      return 1.0 - 2.0 / std::sqrt(3.0 * kappa + 1.0);
    case RateKind::OURS: {
      // sqrt(1 - sqrt(2k-1)/k) evaluated as (k-1)^2 / (k(k + sqrt(2k-1)))
      // to avoid the cancellation near kappa = 1
      const double root = std::sqrt(2.0 * kappa - 1.0);
      const double omega = (kappa - 1.0) * (kappa - 1.0) / (kappa * (kappa + root));
      return std::sqrt(omega);
    }
  }
  throw std::invalid_argument("reference_rate: unknown kind");
}

double classic_beta(double kappa) {
  if (!(kappa >= 1.0)) throw std::invalid_argument("classic_beta requires kappa >= 1");
  const double rk = std::sqrt(kappa);
  return (rk - 1.0) / (rk + 1.0);
}

}  // namespace namcert
