#include <doctest.h>

#include <cmath>
#include <vector>

#include "namcert/certificate.hpp"
#include "namcert/model.hpp"

using namespace namcert;

namespace {

GradientFn quadratic_grad(std::vector<double> spectrum) {
  return [spectrum](const std::vector<double>& x) {
    std::vector<double> g(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) g[i] = spectrum[i] * x[i];
    return g;
  };
}

}  // namespace

TEST_SUITE("model") {

TEST_CASE("condition class and params validate") {
  CHECK_THROWS_AS(ConditionClass(0.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(ConditionClass(2.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(AlgoParams(0.0, 0.1), std::invalid_argument);
  CHECK_THROWS_AS(AlgoParams(1.0, -0.1), std::invalid_argument);
  const ConditionClass c(0.5, 2.0);
  CHECK(c.kappa() == doctest::Approx(4.0));
  CHECK(c.s() == doctest::Approx(0.25));
}

TEST_CASE("build_realization direct substitution") {
  const StateSpaceRealization r =
      build_realization(ConditionClass(1.0, 1.0), AlgoParams(1.0, 0.0), 1.0);
  CHECK(r.A[0][0] == 1.0);
  CHECK(r.A[0][1] == 0.0);
  CHECK(r.A[1][0] == 1.0);
  CHECK(r.A[2][0] == -1.0);
  CHECK(r.A[2][1] == 0.0);
  CHECK(r.B[0] == -1.0);
  CHECK(r.B[2] == 1.0);
  CHECK(r.C[0][0] == 1.0);
  CHECK(r.C[0][2] == 1.0);  // rho^2
  CHECK(r.C[1][0] == -1.0);
  CHECK(r.D[0] == -1.0);
  CHECK(r.D[1] == 1.0);
}

TEST_CASE("build_realization at the kappa=4 tuning") {
  const StateSpaceRealization r = build_realization(
      ConditionClass(0.25, 1.0), AlgoParams(1.0, 0.3275964), 0.5818610);
  CHECK(r.A[0][0] == doctest::Approx(1.3275964).epsilon(1e-12));
  CHECK(r.A[0][1] == doctest::Approx(-0.3275964).epsilon(1e-12));
  CHECK(r.A[0][2] == 0.0);
  CHECK(r.C[0][2] == doctest::Approx(0.5818610 * 0.5818610).epsilon(1e-15));
}

TEST_CASE("build_realization rejects rho <= 0") {
  CHECK_THROWS_AS(
      build_realization(ConditionClass(1.0, 2.0), AlgoParams(0.5, 0.1), 0.0),
      std::invalid_argument);
}

TEST_CASE("nam_step hand-evaluated cases") {
  const GradientFn g = quadratic_grad({1.0});

  // beta = 0: plain gradient step to the minimizer
  NamStep s = nam_step({2.0}, {2.0}, g, AlgoParams(1.0, 0.0));
  CHECK(s.y[0] == 2.0);
  CHECK(s.x_next[0] == 0.0);

  // beta = 0.5, x_t = 1, x_prev = 0: y = 1.5, x_next = 0
  s = nam_step({1.0}, {0.0}, g, AlgoParams(1.0, 0.5));
  CHECK(s.y[0] == 1.5);
  CHECK(s.x_next[0] == 0.0);
}

TEST_CASE("nam_step fixed point stays fixed") {
  // for f with minimizer x*, grad(x*) = 0 so the step reproduces x* exactly
  const GradientFn g = quadratic_grad({1.0, 4.0});
  const std::vector<double> xstar = {0.0, 0.0};
  const NamStep s = nam_step(xstar, xstar, g, AlgoParams(0.25, 0.6));
  CHECK(s.x_next == xstar);
  CHECK(s.y == xstar);
}

TEST_CASE("nam_step dimension mismatch") {
  const GradientFn g = quadratic_grad({1.0});
  CHECK_THROWS_AS(nam_step({1.0, 2.0}, {1.0}, g, AlgoParams(1.0, 0.0)),
                  std::invalid_argument);
}

TEST_CASE("simulate_state_space T=0 returns the initial state only") {
  const StateSpaceRealization r =
      build_realization(ConditionClass(1.0, 1.0), AlgoParams(1.0, 0.0), 1.0);
  const auto traj = simulate_state_space(r, quadratic_grad({1.0}), {2.0, 2.0, 0.0}, 0);
  REQUIRE(traj.size() == 1);
  CHECK(traj[0] == std::vector<double>{2.0, 2.0, 0.0});
}

TEST_CASE("simulate_state_space beta=0 collapses in one step") {
  const StateSpaceRealization r =
      build_realization(ConditionClass(1.0, 1.0), AlgoParams(1.0, 0.0), 1.0);
  const auto traj = simulate_state_space(r, quadratic_grad({1.0}), {2.0, 2.0, 0.0}, 4);
  // first components: 2, 0, 0, ...
  CHECK(traj[0][0] == 2.0);
  for (std::size_t t = 1; t < traj.size(); ++t) CHECK(traj[t][0] == 0.0);
}

TEST_CASE("simulate_state_space matches the two-line iteration") {
  // identical dynamics through the lifted system and through nam_step
  const double m = 0.25, L = 1.0;
  const Tuning t4 = optimal_tuning(4.0);
  const AlgoParams params(1.0, t4.beta);
  const StateSpaceRealization r = build_realization(ConditionClass(m, L), params, t4.tau);

  for (int p = 1; p <= 3; ++p) {
    std::vector<double> spectrum(p, L);
    spectrum[0] = m;
    const GradientFn g = quadratic_grad(spectrum);

    std::vector<double> x1(p), x0(p);
    for (int i = 0; i < p; ++i) {
      x1[i] = 1.0 + 0.25 * i;
      x0[i] = -2.0 + 0.5 * i;
    }
    std::vector<double> xi0(3 * p, 0.0);
    for (int i = 0; i < p; ++i) {
      xi0[i] = x1[i];
      xi0[p + i] = x0[i];
    }

    const int T = 100;
    const auto traj = simulate_state_space(r, g, xi0, T);
    REQUIRE(traj.size() == static_cast<std::size_t>(T) + 1);

    std::vector<double> prev = x0, cur = x1;
    for (int t = 0; t <= T; ++t) {
      for (int i = 0; i < p; ++i) CHECK(std::abs(traj[t][i] - cur[i]) <= 1e-12);
      if (t == T) break;
      NamStep s = nam_step(cur, prev, g, params);
      prev = cur;
      cur = s.x_next;
    }
  }
}

TEST_CASE("simulate_state_space validates input") {
  const StateSpaceRealization r =
      build_realization(ConditionClass(1.0, 1.0), AlgoParams(1.0, 0.0), 1.0);
  CHECK_THROWS_AS(simulate_state_space(r, quadratic_grad({1.0}), {1.0, 2.0}, 3),
                  std::invalid_argument);
  CHECK_THROWS_AS(simulate_state_space(r, quadratic_grad({1.0}), {1.0, 2.0, 3.0}, -1),
                  std::invalid_argument);
}

TEST_CASE("reference_rate frozen values") {
  // high-precision evaluations of the five closed forms
  CHECK(reference_rate(RateKind::NQ, 100.0) == doctest::Approx(0.9).epsilon(1e-15));
  CHECK(reference_rate(RateKind::OURS, 1.0) == 0.0);
  CHECK(reference_rate(RateKind::NG, 100.0) ==
        doctest::Approx(0.9486832980505138).epsilon(1e-12));
  CHECK(reference_rate(RateKind::LQ, 100.0) ==
        doctest::Approx(0.88472191645915301).epsilon(1e-12));
  CHECK(reference_rate(RateKind::BP, 100.0) ==
        doctest::Approx(0.80099256195800217).epsilon(1e-12));
  CHECK(reference_rate(RateKind::OURS, 100.0) ==
        doctest::Approx(0.92678618904434541).epsilon(1e-12));
  // BP is returned raw below kappa = 3
  CHECK(reference_rate(RateKind::BP, 1.0) < 0.0);
  CHECK(reference_rate(RateKind::BP, 3.0) == doctest::Approx(0.0).scale(1.0).epsilon(1e-15));
}

TEST_CASE("reference_rate rejects kappa < 1") {
  CHECK_THROWS_AS(reference_rate(RateKind::NG, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(classic_beta(0.99), std::invalid_argument);
}

TEST_CASE("rate ordering and monotonicity on a log grid") {
  double prev[5] = {-1.0, -1.0, -1.0, -1.0, -1.0};
  for (int i = 0; i < 100; ++i) {
    const double k = std::exp(std::log(3.0) + (std::log(1e4) - std::log(3.0)) * i / 99.0);
    const double bp = reference_rate(RateKind::BP, k);
    const double lq = reference_rate(RateKind::LQ, k);
    const double nq = reference_rate(RateKind::NQ, k);
    const double ours = reference_rate(RateKind::OURS, k);
    const double ng = reference_rate(RateKind::NG, k);
    CHECK(bp < lq);
    CHECK(lq < nq);
    CHECK(nq < ours);
    CHECK(ours < ng);
    const double cur[5] = {bp, lq, nq, ours, ng};
    for (int j = 0; j < 5; ++j) {
      CHECK(cur[j] >= prev[j]);
      prev[j] = cur[j];
    }
  }
}

}  // TEST_SUITE
