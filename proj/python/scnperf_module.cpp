#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "scn/analytic.hpp"
#include "scn/config.hpp"
#include "scn/errors.hpp"
#include "scn/model.hpp"
#include "scn/rng.hpp"
#include "scn/simulator.hpp"
#include "scn/special_functions.hpp"
#include "scn/sweep.hpp"
#include "scn/thresholds.hpp"

namespace py = pybind11;
using namespace pybind11::literals;
using namespace scn;

PYBIND11_MODULE(scnperf, m) {
  m.doc() =
      "Coverage probability and area spectral efficiency analysis for "
      "Poisson small-cell networks with LoS/NLoS path loss";
  m.attr("__version__") = kVersion;

  py::register_exception<UsageError>(m, "UsageError", PyExc_ValueError);
  py::register_exception<ParameterError>(m, "ParameterError", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<NumericalError>(m, "NumericalError", PyExc_RuntimeError);

  py::class_<NetworkEnvironment>(m, "NetworkEnvironment")
      .def_readonly("tx_power_mw", &NetworkEnvironment::tx_power_mw)
      .def_readonly("noise_mw", &NetworkEnvironment::noise_mw)
      .def("segment_count",
           [](const NetworkEnvironment& env) { return env.model.segments.size(); });

  m.def("preset_3gpp_case1", &preset_3gpp_case1,
        "Two-segment 3GPP Case 1 environment (TR 36.828 pico parameters)");
  m.def("preset_single_slope", &preset_single_slope, "alpha"_a, "a"_a,
        "tx_power_mw"_a, "noise_mw"_a,
        "Single-slope baseline without LoS/NLoS differentiation");
  m.def(
      "env_from_config",
      [](const std::string& text) { return to_environment(parse_config(text)); },
      "text"_a, "Builds an environment from key=value config text");

  m.def(
      "path_gain",
      [](const NetworkEnvironment& env, double r, bool los) {
        return path_gain(env.model, r, los);
      },
      "env"_a, "r"_a, "los"_a, "Linear path gain at distance r (km)");
  m.def(
      "los_probability",
      [](const NetworkEnvironment& env, double r) {
        return los_probability(env.model, r);
      },
      "env"_a, "r"_a, "LoS probability at distance r (km)");

  m.def("hyp2f1_nonpos", py::overload_cast<double, double, double, double>(&hyp2f1_nonpos),
        "a"_a, "b"_a, "c"_a, "z"_a,
        "Gauss hypergeometric 2F1(a,b;c;z) for z <= 0");
  m.def("interference_integral_near", &interference_integral_near, "alpha"_a,
        "beta"_a, "t"_a, "d"_a, "Integral of u^beta/(1+t u^alpha) over [0, d]");
  m.def("interference_integral_far", &interference_integral_far, "alpha"_a,
        "beta"_a, "t"_a, "d"_a, "Integral of u^beta/(1+t u^alpha) over [d, inf)");

  m.def("laplace_interference", &laplace_interference, "env"_a, "lambda_"_a,
        "r"_a, "s"_a, "Interference Laplace transform by quadrature");
  m.def("laplace_case1_los", &laplace_case1_los, "env"_a, "lambda_"_a, "gamma"_a,
        "r"_a);
  m.def("laplace_case1_nlos_near", &laplace_case1_nlos_near, "env"_a, "lambda_"_a,
        "gamma"_a, "r"_a);
  m.def("laplace_case1_nlos_far", &laplace_case1_nlos_far, "env"_a, "lambda_"_a,
        "gamma"_a, "r"_a);
  m.def(
      "nearest_bs_pdf_los",
      [](const NetworkEnvironment& env, double lambda, std::size_t n, double r) {
        return nearest_bs_pdf_los(env, lambda, n, r);
      },
      "env"_a, "lambda_"_a, "segment"_a, "r"_a);
  m.def(
      "nearest_bs_pdf_nlos",
      [](const NetworkEnvironment& env, double lambda, std::size_t n, double r) {
        return nearest_bs_pdf_nlos(env, lambda, n, r);
      },
      "env"_a, "lambda_"_a, "segment"_a, "r"_a);

  py::class_<CoverageResult>(m, "CoverageResult")
      .def_readonly("value", &CoverageResult::value)
      .def_readonly("abs_error_estimate", &CoverageResult::abs_error_estimate)
      .def_property_readonly("term_breakdown", [](const CoverageResult& r) {
        py::list out;
        for (const auto& t : r.term_breakdown) {
          out.append(py::make_tuple(t.segment, t.los, t.value));
        }
        return out;
      });

  auto as_query = [](double lambda, double gamma) {
    return CoverageQuery{lambda, gamma};
  };
  m.def(
      "coverage_general",
      [as_query](const NetworkEnvironment& env, double lambda, double gamma) {
        return coverage_general(env, as_query(lambda, gamma));
      },
      "env"_a, "lambda_"_a, "gamma"_a, "General coverage engine (any model)");
  m.def(
      "coverage_case1",
      [as_query](const NetworkEnvironment& env, double lambda, double gamma) {
        return coverage_case1(env, as_query(lambda, gamma));
      },
      "env"_a, "lambda_"_a, "gamma"_a, "Closed-form Case 1 coverage engine");
  m.def(
      "coverage_probability",
      [as_query](const NetworkEnvironment& env, double lambda, double gamma) {
        return coverage_probability(env, as_query(lambda, gamma));
      },
      "env"_a, "lambda_"_a, "gamma"_a, "Dispatching coverage front end");

  py::class_<AseResult>(m, "AseResult")
      .def_readonly("value", &AseResult::value)
      .def_readonly("abs_error_estimate", &AseResult::abs_error_estimate);
  m.def("area_spectral_efficiency", &area_spectral_efficiency, "env"_a,
        "lambda_"_a, "gamma0"_a, "ASE in bps/Hz/km^2");

  py::class_<rng::Xoshiro256pp>(m, "RngStream")
      .def(py::init<std::uint64_t, std::uint64_t>(), "seed"_a, "stream"_a)
      .def("uniform01", &rng::Xoshiro256pp::uniform01);

  py::class_<SimulationConfig>(m, "SimulationConfig")
      .def(py::init([](double lambda, double region_radius, std::uint64_t trials,
                       std::uint64_t seed, std::vector<double> gamma_list,
                       double gamma0) {
             SimulationConfig cfg;
             cfg.lambda = lambda;
             cfg.region_radius =
                 region_radius > 0.0 ? region_radius : default_region_radius(lambda);
             cfg.trials = trials;
             cfg.seed = seed;
             cfg.gamma_list = std::move(gamma_list);
             cfg.gamma0 = gamma0;
             return cfg;
           }),
           "lambda_"_a, "region_radius"_a = 0.0, "trials"_a = 10000, "seed"_a = 1,
           "gamma_list"_a = std::vector<double>{1.0}, "gamma0"_a = 10.0)
      .def_readwrite("lambda_", &SimulationConfig::lambda)
      .def_readwrite("region_radius", &SimulationConfig::region_radius)
      .def_readwrite("trials", &SimulationConfig::trials)
      .def_readwrite("seed", &SimulationConfig::seed)
      .def_readwrite("gamma_list", &SimulationConfig::gamma_list)
      .def_readwrite("gamma0", &SimulationConfig::gamma0);

  py::class_<RealizedNetwork>(m, "RealizedNetwork")
      .def(py::init<>())
      .def_readwrite("bs_positions", &RealizedNetwork::bs_positions)
      .def_readwrite("los_flags", &RealizedNetwork::los_flags)
      .def_readwrite("fading_gains", &RealizedNetwork::fading_gains)
      .def("__len__", &RealizedNetwork::size);
  m.def("generate_network", &generate_network, "config"_a, "env"_a, "stream"_a);
  m.def(
      "sinr_of_typical_ue",
      [](const RealizedNetwork& net, const NetworkEnvironment& env) -> py::object {
        const auto sinr = sinr_of_typical_ue(net, env);
        return sinr ? py::cast(*sinr) : py::none();
      },
      "network"_a, "env"_a, "Linear SINR, or None for an empty network");

  py::class_<Estimate>(m, "Estimate")
      .def_readonly("value", &Estimate::value)
      .def_readonly("std_error", &Estimate::std_error);
  py::class_<EmpiricalResult>(m, "EmpiricalResult")
      .def_readonly("coverage", &EmpiricalResult::coverage)
      .def_readonly("ase", &EmpiricalResult::ase)
      .def_readonly("empty_network_trials", &EmpiricalResult::empty_network_trials)
      .def_readonly("trials", &EmpiricalResult::trials);
  m.def("estimate_coverage", &estimate_coverage, "config"_a, "env"_a,
        "threads"_a = 0);
  m.def("estimate_ase", &estimate_ase, "config"_a, "env"_a, "threads"_a = 0);
  m.def("default_region_radius", &default_region_radius, "lambda_"_a);

  py::class_<CoveragePeakReport>(m, "CoveragePeakReport")
      .def_readonly("lambda0", &CoveragePeakReport::lambda0)
      .def_readonly("gamma", &CoveragePeakReport::gamma)
      .def_readonly("bracket_lo", &CoveragePeakReport::bracket_lo)
      .def_readonly("bracket_hi", &CoveragePeakReport::bracket_hi)
      .def_readonly("iterations", &CoveragePeakReport::iterations)
      .def_readonly("derivative_residual", &CoveragePeakReport::derivative_residual);
  m.def("find_coverage_peak", &find_coverage_peak, "env"_a, "gamma"_a,
        "bracket_lo"_a, "bracket_hi"_a, "fd_log_step"_a = 0.01);

  py::class_<SlopePoint>(m, "SlopePoint")
      .def_readonly("lambda_", &SlopePoint::lambda)
      .def_readonly("ase", &SlopePoint::ase)
      .def_readonly("slope", &SlopePoint::slope);
  py::class_<AseRecoveryReport>(m, "AseRecoveryReport")
      .def_readonly("lambda1", &AseRecoveryReport::lambda1)
      .def_readonly("gamma0", &AseRecoveryReport::gamma0)
      .def_readonly("slope_threshold", &AseRecoveryReport::slope_threshold)
      .def_readonly("profile", &AseRecoveryReport::profile);
  m.def("find_ase_recovery", &find_ase_recovery, "env"_a, "gamma0"_a, "grid"_a,
        "slope_threshold"_a = 0.9);
}
