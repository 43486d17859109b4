#pragma once

#include <array>
#include <functional>
#include <vector>

namespace namcert {

/// Problem class data: strong-convexity modulus m and gradient Lipschitz
/// constant L with 0 < m <= L < inf.
struct ConditionClass {
  ConditionClass(double m_in, double L_in);
  double m;
  double L;
  double kappa() const { return L / m; }
  double s() const { return m / L; }  // 1/kappa
};

/// Step-size alpha > 0 and momentum beta >= 0.
struct AlgoParams {
  AlgoParams(double alpha_in, double beta_in);
  double alpha;
  double beta;
};

/// State-space realization of the momentum iteration:
///   A = [1+b  -b  0; 1 0 0; L(-b-1)  bL  0],  B = [-a; 0; 1],
///   C = [L(1+b)  -Lb  rho^2; -m(1+b)  mb  0], D = [-1; 1].
struct StateSpaceRealization {
  std::array<std::array<double, 3>, 3> A{};
  std::array<double, 3> B{};
  std::array<std::array<double, 3>, 2> C{};
  std::array<double, 2> D{};
  double rho = 0.0;
};

StateSpaceRealization build_realization(const ConditionClass& cond,
                                        const AlgoParams& params, double rho);

using GradientFn = std::function<std::vector<double>(const std::vector<double>&)>;

struct NamStep {
  std::vector<double> x_next;
  std::vector<double> y;
};

/// One update of the momentum iteration:
///   y = (1+beta) x_t - beta x_prev,  x_next = y - alpha grad(y).
NamStep nam_step(const std::vector<double>& x_t, const std::vector<double>& x_prev,
                 const GradientFn& grad, const AlgoParams& params);

/// Runs the lifted dynamics xi_{t+1} = (A (x) I_p) xi_t + (B (x) I_p) u_t with
/// feedback u_t = grad(first row of A applied to xi_t). xi is the stacked
/// state [x_cur | x_prev | w], size 3p. The Kronecker product is applied
/// blockwise, never materialized. Returns xi_0..xi_T.
std::vector<std::vector<double>> simulate_state_space(
    const StateSpaceRealization& r, const GradientFn& grad,
    const std::vector<double>& xi0, int T);

enum class RateKind { NG, NQ, BP, LQ, OURS };

/// Closed-form reference rates as functions of kappa >= 1:
///   NG   sqrt(1 - 1/sqrt(k))       NQ  1 - 1/sqrt(k)
///   BP   1 - 2/sqrt(k+1)           LQ  1 - 2/sqrt(3k+1)
///   OURS sqrt(1 - sqrt(2k-1)/k)
/// BP may be negative for kappa < 3 and is returned raw.
double reference_rate(RateKind kind, double kappa);

/// Classical momentum rule (sqrt(k)-1)/(sqrt(k)+1).
double classic_beta(double kappa);

}  // namespace namcert
