#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cmath>
#include <stdexcept>

#include "namcert/bench.hpp"
#include "namcert/certificate.hpp"
#include "namcert/model.hpp"
#include "namcert/rng.hpp"
#include "namcert/sdpsearch.hpp"

namespace py = pybind11;
using namespace namcert;

namespace {

RateKind parse_kind(const std::string& kind) {
  if (kind == "ng") return RateKind::NG;
  if (kind == "nq") return RateKind::NQ;
  if (kind == "bp") return RateKind::BP;
  if (kind == "lq") return RateKind::LQ;
  if (kind == "ours") return RateKind::OURS;
  throw std::invalid_argument("kind must be one of ng, nq, bp, lq, ours");
}

std::vector<std::vector<double>> sym_to_list(const SymMat& s) {
  std::vector<std::vector<double>> out(s.order(), std::vector<double>(s.order()));
  for (int i = 0; i < s.order(); ++i)
    for (int j = 0; j < s.order(); ++j) out[i][j] = s(i, j);
  return out;
}

py::dict report_dict(const CertifiedRate& res) {
  py::dict d;
  d["alpha"] = res.params.alpha;
  d["beta"] = res.params.beta;
  d["tau"] = res.tau;
  d["ok"] = res.ok;
  d["min_eig_P"] = res.report.min_eig_P;
  d["min_eig_H"] = res.report.min_eig_H;
  d["kappa_P"] = res.report.kappa_P;
  d["schur_h3_min_eig"] = res.report.schur_h3_min_eig;
  d["schur_range_residual"] = res.report.schur_range_residual;
  d["schur_complement_min_eig"] = res.report.schur_complement_min_eig;
  d["det_H3"] = res.report.det_h3;
  d["sylvester_minors"] = std::vector<double>(res.report.sylvester_minors.begin(),
                                              res.report.sylvester_minors.end());
  d["P"] = sym_to_list(res.cert.P);
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Convergence-rate certificates for the momentum method";

  m.def(
      "reference_rate",
      [](const std::string& kind, double kappa) {
        return reference_rate(parse_kind(kind), kappa);
      },
      py::arg("kind"), py::arg("kappa"),
      "Closed-form reference rate; kind is one of ng, nq, bp, lq, ours.");

  m.def("classic_beta", &classic_beta, py::arg("kappa"));

  m.def(
      "optimal_tuning",
      [](double kappa) {
        const Tuning t = optimal_tuning(kappa);
        return py::make_tuple(t.beta, t.tau, t.omega);
      },
      py::arg("kappa"), "Returns (beta, tau, omega) minimizing the certified rate.");

  m.def("discriminant_threshold", &discriminant_threshold, py::arg("kappa"));

  m.def("rate_cubic_roots", &rate_cubic_roots, py::arg("kappa"), py::arg("beta"),
        "All real roots of the cubic rate equation, ascending.");

  m.def(
      "closed_form_P",
      [](double kappa, double beta, double omega) {
        return sym_to_list(closed_form_P(kappa, beta, omega));
      },
      py::arg("kappa"), py::arg("beta"), py::arg("omega"));

  m.def(
      "certified_rate",
      [](double m_in, double L_in) { return report_dict(certified_rate({m_in, L_in})); },
      py::arg("m"), py::arg("L"),
      "Builds and verifies the optimal certificate; returns a report dict.");

  m.def(
      "certify_point",
      [](double m_in, double L_in, double beta, double tau) {
        return report_dict(certify_point({m_in, L_in}, beta, tau));
      },
      py::arg("m"), py::arg("L"), py::arg("beta"), py::arg("tau"));

  m.def(
      "bisect_tau",
      [](double kappa, double beta, double tol) {
        const SearchResult sr = bisect_tau(kappa, beta, tol);
        py::dict d;
        d["tau_star"] = sr.tau_star;
        d["iterations"] = sr.iterations;
        d["residual"] = sr.residual;
        d["feasible"] = sr.feasible_at_tau_star;
        d["no_rate_found"] = sr.no_rate_found;
        d["bracket"] = py::make_tuple(sr.bracket_lo, sr.bracket_hi);
        d["P"] = sym_to_list(sr.P_star);
        return d;
      },
      py::arg("kappa"), py::arg("beta"), py::arg("tol") = 1e-4,
      "Smallest tau with a feasible LMI, by bisection over SDP feasibility.");

  m.def(
      "rate_row",
      [](double kappa) {
        py::dict d;
        d["kappa"] = kappa;
        d["tau_bp"] = reference_rate(RateKind::BP, kappa);
        d["tau_lq"] = reference_rate(RateKind::LQ, kappa);
        d["tau_nq"] = reference_rate(RateKind::NQ, kappa);
        d["tau_ours"] = reference_rate(RateKind::OURS, kappa);
        d["tau_ng"] = reference_rate(RateKind::NG, kappa);
        d["beta_classic"] = classic_beta(kappa);
        d["beta_opt"] = optimal_tuning(kappa).beta;
        return d;
      },
      py::arg("kappa"));

  m.def(
      "simulate",
      [](const std::string& function, double m_in, double L_in, int dim, int iters,
         std::uint64_t seed) {
        const ConditionClass cond(m_in, L_in);
        TestFunction f;
        if (function == "quadratic") {
          std::vector<double> spectrum(dim, L_in);
          spectrum.at(0) = m_in;
          f = make_quadratic(dim, spectrum, m_in, L_in);
        } else if (function == "logcosh") {
          f = make_logcosh(dim, m_in, L_in);
        } else {
          throw std::invalid_argument("function must be quadratic or logcosh");
        }
        const CertifiedRate cr = certified_rate(cond);
        if (!cr.ok) throw std::runtime_error("certificate verification failed");
        Rng rng(seed);
        const auto x0 = rng.sphere_point(dim, 10.0);
        const auto x1 = rng.sphere_point(dim, 10.0);
        const TrajectoryRecord rec = run_trajectory(f, cr.params, x0, x1, iters + 1, cr.cert);
        py::dict d;
        d["dist"] = rec.dist;
        d["C0"] = rec.C0;
        d["tau"] = rec.tau_used;
        d["kappa_P"] = rec.kappa_P;
        d["fitted_rate"] = rec.fitted_rate;
        d["violations"] = rec.bound_violations;
        return d;
      },
      py::arg("function"), py::arg("m"), py::arg("L"), py::arg("dim"), py::arg("iters"),
      py::arg("seed") = 12345,
      "Runs the iteration from two seeded sphere points and checks the bound.");
}
