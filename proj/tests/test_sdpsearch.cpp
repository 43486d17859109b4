#include <doctest.h>

#include <cmath>
#include <vector>

#include "namcert/certificate.hpp"
#include "namcert/sdpsearch.hpp"

using namespace namcert;

namespace {

VerificationReport verify_witness(double kappa, double beta, double tau, const SymMat& P) {
  Certificate c;
  c.P = P;
  c.lambda = 1.0;
  c.tau = tau;
  c.rho = tau;
  c.omega = tau * tau;
  return verify_certificate(ConditionClass(1.0 / kappa, 1.0), AlgoParams(1.0, beta), c);
}

}  // namespace

TEST_SUITE("sdpsearch") {

TEST_CASE("feasibility on both sides of the optimum") {
  const double k = 4.0;
  const Tuning t = optimal_tuning(k);

  const FeasibilityResult above = feasibility({k, t.beta, t.tau + 0.05});
  CHECK(above.verdict == Verdict::Feasible);
  CHECK(above.margin >= 0.0);

  const FeasibilityResult below = feasibility({k, t.beta, t.tau - 0.05});
  CHECK(below.verdict == Verdict::Infeasible);
  CHECK(below.margin < 0.0);
}

TEST_CASE("feasibility witnesses satisfy the certificate checks") {
  for (const double k : {4.0, 100.0}) {
    const Tuning t = optimal_tuning(k);
    for (const double dtau : {0.05, 0.2}) {
      const double tau = t.tau + dtau * (1.0 - t.tau) / 0.25;
      const FeasibilityResult fr = feasibility({k, t.beta, std::min(tau, 0.999)});
      REQUIRE(fr.verdict == Verdict::Feasible);
      const VerificationReport rep =
          verify_witness(k, t.beta, std::min(tau, 0.999), fr.P);
      CHECK(rep.min_eig_P >= -1e-6);
      CHECK(rep.min_eig_H >= -1e-6);
    }
  }
}

TEST_CASE("feasible far from the optimum at tau = 0.99") {
  const Tuning t = optimal_tuning(4.0);
  const FeasibilityResult fr = feasibility({4.0, t.beta, 0.99});
  CHECK(fr.verdict == Verdict::Feasible);
  const VerificationReport rep = verify_witness(4.0, t.beta, 0.99, fr.P);
  CHECK(rep.min_eig_P >= -1e-6);
  CHECK(rep.min_eig_H >= -1e-6);
}

TEST_CASE("feasibility validates inputs") {
  CHECK_THROWS_AS(feasibility({1.0, 0.5, 0.5}), std::invalid_argument);
  CHECK_THROWS_AS(feasibility({4.0, 0.0, 0.5}), std::invalid_argument);
  CHECK_THROWS_AS(feasibility({4.0, 0.5, 1.0}), std::invalid_argument);
}

TEST_CASE("bisect_tau matches the closed form") {
  const SearchResult r4 = bisect_tau(4.0, optimal_tuning(4.0).beta, 1e-4);
  CHECK(r4.feasible_at_tau_star);
  CHECK(std::abs(r4.tau_star - 0.58186095610021158) <= 1e-3);

  const SearchResult r100 = bisect_tau(100.0, optimal_tuning(100.0).beta, 1e-4);
  CHECK(r100.feasible_at_tau_star);
  CHECK(std::abs(r100.tau_star - 0.92678618904434541) <= 1e-3);
}

TEST_CASE("bisect_tau improves on the general bound under the classical tuning") {
  const SearchResult r = bisect_tau(100.0, classic_beta(100.0), 1e-4);
  CHECK(r.feasible_at_tau_star);
  CHECK(r.tau_star <= 0.948684);
}

TEST_CASE("bisect_tau bracket straddles feasibility") {
  const SearchResult r = bisect_tau(10.0, optimal_tuning(10.0).beta, 1e-4);
  REQUIRE(r.feasible_at_tau_star);
  CHECK_FALSE(r.bracket_anomaly);
  CHECK(r.bracket_hi - r.bracket_lo <= 1e-4);
  CHECK(r.tau_star == r.bracket_hi);
  CHECK(feasibility({10.0, optimal_tuning(10.0).beta, r.bracket_hi}).verdict ==
        Verdict::Feasible);
  CHECK(feasibility({10.0, optimal_tuning(10.0).beta, r.bracket_lo}).verdict !=
        Verdict::Feasible);
  // first probe is tau = 0.5
  REQUIRE_FALSE(r.trace.empty());
  CHECK(r.trace[0].tau == 0.5);
}

TEST_CASE("bisect_tau is deterministic bit for bit") {
  const SearchResult a = bisect_tau(42.0, optimal_tuning(42.0).beta, 1e-4);
  const SearchResult b = bisect_tau(42.0, optimal_tuning(42.0).beta, 1e-4);
  CHECK(a.tau_star == b.tau_star);
  CHECK(a.residual == b.residual);
  CHECK(a.iterations == b.iterations);
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j) CHECK(a.P_star(i, j) == b.P_star(i, j));
}

TEST_CASE("bisect_tau reports no rate for an infeasible momentum") {
  // far outside any certificate: the LMI stays infeasible all the way up
  const SearchResult r = bisect_tau(2.0, 5.0, 1e-4);
  CHECK(r.no_rate_found);
  CHECK_FALSE(r.feasible_at_tau_star);
}

TEST_CASE("bisect_tau validates inputs") {
  CHECK_THROWS_AS(bisect_tau(1.0, 0.5, 1e-4), std::invalid_argument);
  CHECK_THROWS_AS(bisect_tau(4.0, 0.0, 1e-4), std::invalid_argument);
  CHECK_THROWS_AS(bisect_tau(4.0, 0.5, 1e-7), std::invalid_argument);
}

TEST_CASE("sweep composes bisections") {
  const auto single = sweep({4.0}, BetaRule::Optimal, 1e-4);
  REQUIRE(single.size() == 1);
  CHECK(single[0].feasible_at_tau_star);
  CHECK(single[0].tau_star == bisect_tau(4.0, optimal_tuning(4.0).beta, 1e-4).tau_star);

  const auto rising = sweep({10.0, 100.0, 1000.0}, BetaRule::Optimal, 1e-4);
  REQUIRE(rising.size() == 3);
  CHECK(rising[0].tau_star <= rising[1].tau_star);
  CHECK(rising[1].tau_star <= rising[2].tau_star);

  CHECK_THROWS_AS(sweep({}, BetaRule::Optimal, 1e-4), std::invalid_argument);
}

TEST_CASE("sweep records per-entry failures and continues") {
  const auto results = sweep({4.0, 1.0, 9.0}, BetaRule::Optimal, 1e-4);
  REQUIRE(results.size() == 3);
  CHECK(results[0].error.empty());
  CHECK_FALSE(results[1].error.empty());  // kappa = 1 rejected, sweep continued
  CHECK(results[2].error.empty());
  CHECK(results[2].feasible_at_tau_star);
}

}  // TEST_SUITE
