#include "scn/thresholds.hpp"

#include <cmath>
#include <string>

#include "scn/parallel.hpp"

namespace scn {

namespace {

constexpr double kBracketWidth = 0.005;    // stop at 0.5% relative bracket width
constexpr double kCoverageNoise = 1e-6;    // abs error contract of the coverage ops

double coverage_value(const NetworkEnvironment& env, double lambda, double gamma) {
  return coverage_probability(env, {lambda, gamma}).value;
}

// d p_cov / d lambda by central differences at lambda * exp(+-h).
double coverage_slope(const NetworkEnvironment& env, double lambda, double gamma,
                      double h) {
  const double hi = lambda * std::exp(h);
  const double lo = lambda * std::exp(-h);
  return (coverage_value(env, hi, gamma) - coverage_value(env, lo, gamma)) /
         (hi - lo);
}

// Smallest slope magnitude distinguishable from quadrature noise.
double slope_noise_floor(double lambda, double h) {
  return 2.0 * kCoverageNoise / (lambda * (std::exp(h) - std::exp(-h)));
}

}  // namespace

CoveragePeakReport find_coverage_peak(const NetworkEnvironment& env, double gamma,
                                      double bracket_lo, double bracket_hi,
                                      double fd_log_step) {
  if (!(bracket_lo > 0.0) || !(bracket_lo < bracket_hi)) {
    throw DomainError("find_coverage_peak: need 0 < bracket_lo < bracket_hi");
  }
  if (!(gamma > 0.0)) throw DomainError("find_coverage_peak: gamma must be positive");
  if (!(fd_log_step > 0.0)) {
    throw DomainError("find_coverage_peak: fd_log_step must be positive");
  }

  double lo = bracket_lo;
  double hi = bracket_hi;
  const double slope_lo = coverage_slope(env, lo, gamma, fd_log_step);
  const double slope_hi = coverage_slope(env, hi, gamma, fd_log_step);

  if (std::fabs(slope_lo) < slope_noise_floor(lo, fd_log_step) &&
      std::fabs(slope_hi) < slope_noise_floor(hi, fd_log_step)) {
    throw ToleranceError(
        "find_coverage_peak: derivative is below the quadrature noise floor at "
        "both bracket ends");
  }
  if (!(slope_lo > 0.0) || !(slope_hi < 0.0)) {
    throw BracketingError(
        "find_coverage_peak: d p_cov/d lambda does not change sign from + to - "
        "over [" + std::to_string(bracket_lo) + ", " + std::to_string(bracket_hi) +
        "]; no interior coverage peak");
  }

  std::size_t iterations = 0;
  while (hi / lo > 1.0 + kBracketWidth) {
    const double mid = std::sqrt(lo * hi);
    const double slope_mid = coverage_slope(env, mid, gamma, fd_log_step);
    if (slope_mid > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
    ++iterations;
  }

  CoveragePeakReport report;
  report.lambda0 = std::sqrt(lo * hi);
  report.gamma = gamma;
  report.bracket_lo = lo;
  report.bracket_hi = hi;
  report.iterations = iterations;
  report.derivative_residual = coverage_slope(env, report.lambda0, gamma, fd_log_step);
  return report;
}

namespace detail {

std::size_t recovery_index(const std::vector<double>& slopes, double threshold) {
  std::size_t first_good = npos;
  for (std::size_t i = slopes.size(); i-- > 0;) {
    if (slopes[i] >= threshold) {
      first_good = i;
    } else {
      break;
    }
  }
  return first_good;
}

}  // namespace detail

AseRecoveryReport find_ase_recovery(const NetworkEnvironment& env, double gamma0,
                                    const std::vector<double>& grid,
                                    double slope_threshold) {
  if (grid.size() < 3) {
    throw DomainError("find_ase_recovery: grid needs at least 3 points");
  }
  for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
    if (!(grid[i] > 0.0) || !(grid[i] < grid[i + 1])) {
      throw DomainError("find_ase_recovery: grid must be positive and ascending");
    }
  }
  if (grid.front() > 1e2 * (1.0 + 1e-9) || grid.back() < 1e5 * (1.0 - 1e-9)) {
    throw DomainError("find_ase_recovery: grid must span at least [1e2, 1e5]");
  }

  AseRecoveryReport report;
  report.gamma0 = gamma0;
  report.slope_threshold = slope_threshold;
  report.profile.assign(grid.size(), SlopePoint{});

  std::vector<double> log_ase(grid.size());
  parallel_for_index(grid.size(), 0, [&](std::size_t i) {
    const double ase = area_spectral_efficiency(env, grid[i], gamma0).value;
    log_ase[i] = std::log(ase);
    report.profile[i].lambda = grid[i];
    report.profile[i].ase = ase;
    report.profile[i].slope = std::numeric_limits<double>::quiet_NaN();
  });

  std::vector<double> slopes;  // slope of the step ending at grid point i+1
  slopes.reserve(grid.size() - 1);
  for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
    const double slope = (log_ase[i + 1] - log_ase[i]) /
                         (std::log(grid[i + 1]) - std::log(grid[i]));
    slopes.push_back(slope);
    report.profile[i + 1].slope = slope;
  }

  const std::size_t idx = detail::recovery_index(slopes, slope_threshold);
  if (idx == detail::npos) {
    throw SlopeNotFoundError(
        "find_ase_recovery: log-log slope never recovers to " +
            std::to_string(slope_threshold) + " within the grid",
        report.profile);
  }
  report.lambda1 = grid[idx + 1];
  return report;
}

}  // namespace scn
