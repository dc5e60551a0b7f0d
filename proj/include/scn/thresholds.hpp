#ifndef SCN_THRESHOLDS_HPP
#define SCN_THRESHOLDS_HPP

#include <cstddef>
#include <vector>

#include "scn/analytic.hpp"
#include "scn/errors.hpp"
#include "scn/model.hpp"

namespace scn {

/// The derivative of the coverage probability changes sign nowhere inside
/// the supplied bracket.
class BracketingError : public Error {
 public:
  using Error::Error;
};

/// The finite-difference derivative is below the quadrature noise floor at
/// both bracket ends; no sign decision is possible.
class ToleranceError : public Error {
 public:
  using Error::Error;
};

struct CoveragePeakReport {
  double lambda0 = 0.0;  // BSs/km^2
  double gamma = 0.0;
  double bracket_lo = 0.0;
  double bracket_hi = 0.0;
  std::size_t iterations = 0;
  double derivative_residual = 0.0;  // d p_cov / d lambda at lambda0
};

/// Locates the density at which the coverage probability peaks, by bisecting
/// the sign of d p_cov / d lambda. The derivative is taken by central finite
/// differences in log-density with a 1% relative step (fd_log_step = 0.01);
/// bisection stops once the bracket narrows to 0.5% relative width.
///
/// Throws BracketingError when the derivative has the same sign at both ends
/// and ToleranceError when it is lost in quadrature noise at both ends.
CoveragePeakReport find_coverage_peak(const NetworkEnvironment& env, double gamma,
                                      double bracket_lo, double bracket_hi,
                                      double fd_log_step = 0.01);

struct SlopePoint {
  double lambda = 0.0;
  double ase = 0.0;
  double slope = 0.0;  // d(ln ASE)/d(ln lambda) on the grid step ending here
};

struct AseRecoveryReport {
  double lambda1 = 0.0;  // BSs/km^2
  double gamma0 = 0.0;
  double slope_threshold = 0.0;
  std::vector<SlopePoint> profile;  // one entry per grid point
};

/// The log-log ASE slope never recovers to the threshold within the grid.
/// Carries the full slope profile for diagnosis.
class SlopeNotFoundError : public Error {
 public:
  SlopeNotFoundError(const std::string& what, std::vector<SlopePoint> profile)
      : Error(what), profile_(std::move(profile)) {}
  const std::vector<SlopePoint>& profile() const { return profile_; }

 private:
  std::vector<SlopePoint> profile_;
};

/// Finds the smallest grid density at which the log-log ASE slope returns to
/// >= slope_threshold and stays there for all larger grid points: the onset
/// of the near-linear densification regime. The grid must be ascending and
/// span at least [1e2, 1e5] BSs/km^2.
AseRecoveryReport find_ase_recovery(const NetworkEnvironment& env, double gamma0,
                                    const std::vector<double>& grid,
                                    double slope_threshold = 0.9);

namespace detail {
/// First index i such that slopes[j] >= threshold for all j >= i; npos when
/// the tail never settles. Exposed for direct testing.
std::size_t recovery_index(const std::vector<double>& slopes, double threshold);
inline constexpr std::size_t npos = static_cast<std::size_t>(-1);
}  // namespace detail

}  // namespace scn

#endif  // SCN_THRESHOLDS_HPP
