#include "scn/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "scn/analytic.hpp"
#include "scn/errors.hpp"
#include "scn/parallel.hpp"
#include "scn/rng.hpp"
#include "scn/simulator.hpp"
#include "scn/thresholds.hpp"

namespace scn {

namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

std::string join_fmt(const std::vector<double>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ",";
    out += fmt(values[i]);
  }
  return out;
}

// Per-grid-point Monte Carlo seed so rows stay independent of grid layout
// changes elsewhere in the file.
std::uint64_t point_seed(std::uint64_t root, std::uint64_t index) {
  std::uint64_t s = root ^ (0x9E3779B97F4A7C15ULL * (index + 1));
  return rng::splitmix64(s);
}

struct CsvDocument {
  std::vector<std::string> metadata;  // without the leading "# "
  std::string header;
  std::vector<std::string> rows;

  void write(const std::string& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw UsageError("cannot open output file: " + path);
    for (const auto& line : metadata) out << "# " << line << "\n";
    out << header << "\n";
    for (const auto& row : rows) out << row << "\n";
    if (!out) throw UsageError("failed writing output file: " + path);
  }
};

}  // namespace

SweepMode parse_sweep_mode(const std::string& name) {
  if (name == "coverage") return SweepMode::coverage;
  if (name == "ase") return SweepMode::ase;
  if (name == "validate") return SweepMode::validate;
  if (name == "lambda0") return SweepMode::lambda0;
  if (name == "lambda1") return SweepMode::lambda1;
  throw UsageError("unknown mode '" + name +
                   "' (expected coverage, ase, validate, lambda0 or lambda1)");
}

std::vector<double> log_grid(double start, double stop, int points_per_decade) {
  if (!(start > 0.0) || !(start < stop)) {
    throw UsageError("density grid is empty: need 0 < start < stop");
  }
  if (points_per_decade < 1) {
    throw UsageError("points-per-decade must be >= 1");
  }
  std::vector<double> grid;
  const double decades = std::log10(stop / start);
  const int steps = static_cast<int>(std::floor(decades * points_per_decade + 1e-9));
  for (int k = 0; k <= steps; ++k) {
    grid.push_back(start * std::pow(10.0, static_cast<double>(k) / points_per_decade));
  }
  if (grid.back() < stop * (1.0 - 1e-9)) grid.push_back(stop);
  return grid;
}

int run_sweep(const SweepSpec& spec, const ModelConfig& config) {
  if (spec.out_path.empty()) throw UsageError("output path is required");
  if (spec.gammas.empty() && (spec.mode == SweepMode::coverage ||
                              spec.mode == SweepMode::validate ||
                              spec.mode == SweepMode::lambda0)) {
    throw UsageError("at least one gamma value is required");
  }
  if (spec.gamma0s.empty() &&
      (spec.mode == SweepMode::ase || spec.mode == SweepMode::lambda1)) {
    throw UsageError("at least one gamma0 value is required");
  }

  const NetworkEnvironment env = to_environment(config);
  check_interference_feasible(env.model);

  std::vector<double> gammas = spec.gammas;
  std::sort(gammas.begin(), gammas.end());
  std::vector<double> gamma0s = spec.gamma0s;
  std::sort(gamma0s.begin(), gamma0s.end());

  CsvDocument doc;
  doc.metadata.push_back(std::string("scnperf ") + kVersion);
  {
    const char* mode_name[] = {"coverage", "ase", "validate", "lambda0", "lambda1"};
    doc.metadata.push_back(std::string("mode=") +
                           mode_name[static_cast<int>(spec.mode)]);
  }
  doc.metadata.push_back("lambda_start=" + fmt(spec.lambda_start));
  doc.metadata.push_back("lambda_stop=" + fmt(spec.lambda_stop));
  doc.metadata.push_back("points_per_decade=" + std::to_string(spec.points_per_decade));
  doc.metadata.push_back("gamma=" + join_fmt(gammas));
  doc.metadata.push_back("gamma0=" + join_fmt(gamma0s));
  doc.metadata.push_back("trials=" + std::to_string(spec.trials));
  doc.metadata.push_back("seed=" + std::to_string(spec.seed));
  doc.metadata.push_back("slope_threshold=" + fmt(spec.slope_threshold));
  {
    std::istringstream cfg_lines(serialize_config(config));
    std::string line;
    while (std::getline(cfg_lines, line)) doc.metadata.push_back("config " + line);
  }

  int failed_rows = 0;

  switch (spec.mode) {
    case SweepMode::coverage: {
      const auto grid = log_grid(spec.lambda_start, spec.lambda_stop,
                                 spec.points_per_decade);
      const bool closed_form = case1_params(env).has_value();
      doc.header = "lambda,gamma,p_cov_analytic,p_cov_closed_form";
      doc.rows.assign(grid.size() * gammas.size(), {});
      parallel_for_index(doc.rows.size(), spec.threads, [&](std::size_t i) {
        const double lambda = grid[i / gammas.size()];
        const double gamma = gammas[i % gammas.size()];
        const CoverageQuery q{lambda, gamma};
        const double general = coverage_general(env, q).value;
        std::string row = fmt(lambda) + "," + fmt(gamma) + "," + fmt(general) + ",";
        if (closed_form) row += fmt(coverage_case1(env, q).value);
        doc.rows[i] = std::move(row);
      });
      break;
    }
    case SweepMode::ase: {
      const auto grid = log_grid(spec.lambda_start, spec.lambda_stop,
                                 spec.points_per_decade);
      doc.header = "lambda,gamma0,ase_analytic";
      doc.rows.assign(grid.size() * gamma0s.size(), {});
      parallel_for_index(doc.rows.size(), spec.threads, [&](std::size_t i) {
        const double lambda = grid[i / gamma0s.size()];
        const double gamma0 = gamma0s[i % gamma0s.size()];
        const double ase = area_spectral_efficiency(env, lambda, gamma0).value;
        doc.rows[i] = fmt(lambda) + "," + fmt(gamma0) + "," + fmt(ase);
      });
      break;
    }
    case SweepMode::validate: {
      const auto grid = log_grid(spec.lambda_start, spec.lambda_stop,
                                 spec.points_per_decade);
      doc.header = "lambda,gamma,analytic,empirical,std_err,abs_diff,pass";
      for (std::size_t i = 0; i < grid.size(); ++i) {
        const double lambda = grid[i];
        SimulationConfig sim;
        sim.lambda = lambda;
        sim.region_radius = default_region_radius(lambda);
        sim.trials = spec.trials;
        sim.seed = point_seed(spec.seed, i);
        sim.gamma_list = gammas;
        sim.gamma0 = gamma0s.front();
        const EmpiricalResult emp = estimate_coverage(sim, env, spec.threads);
        for (std::size_t g = 0; g < gammas.size(); ++g) {
          const double analytic =
              coverage_probability(env, {lambda, gammas[g]}).value;
          const double empirical = emp.coverage[g].second.value;
          const double se = emp.coverage[g].second.std_error;
          const double diff = std::fabs(analytic - empirical);
          const bool pass = diff <= std::max(3.0 * se, 0.01);
          if (!pass) ++failed_rows;
          doc.rows.push_back(fmt(lambda) + "," + fmt(gammas[g]) + "," +
                             fmt(analytic) + "," + fmt(empirical) + "," + fmt(se) +
                             "," + fmt(diff) + "," + (pass ? "1" : "0"));
        }
      }
      break;
    }
    case SweepMode::lambda0: {
      doc.header =
          "lambda0,gamma,bracket_lo,bracket_hi,iterations,derivative_residual";
      for (double gamma : gammas) {
        const CoveragePeakReport r =
            find_coverage_peak(env, gamma, spec.lambda_start, spec.lambda_stop);
        doc.rows.push_back(fmt(r.lambda0) + "," + fmt(r.gamma) + "," +
                           fmt(r.bracket_lo) + "," + fmt(r.bracket_hi) + "," +
                           std::to_string(r.iterations) + "," +
                           fmt(r.derivative_residual));
      }
      break;
    }
    case SweepMode::lambda1: {
      const auto grid = log_grid(spec.lambda_start, spec.lambda_stop,
                                 spec.points_per_decade);
      doc.header = "lambda1,gamma0,slope_threshold";
      for (double gamma0 : gamma0s) {
        const AseRecoveryReport r =
            find_ase_recovery(env, gamma0, grid, spec.slope_threshold);
        for (const SlopePoint& p : r.profile) {
          doc.metadata.push_back("profile gamma0=" + fmt(gamma0) +
                                 " lambda=" + fmt(p.lambda) + " ase=" + fmt(p.ase) +
                                 " slope=" + fmt(p.slope));
        }
        doc.rows.push_back(fmt(r.lambda1) + "," + fmt(gamma0) + "," +
                           fmt(r.slope_threshold));
      }
      break;
    }
  }

  doc.write(spec.out_path);
  return failed_rows;
}

}  // namespace scn
