#ifndef SCN_ANALYTIC_HPP
#define SCN_ANALYTIC_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "scn/model.hpp"

namespace scn {

struct CoverageQuery {
  double lambda = 0.0;  // BS density, BSs/km^2
  double gamma = 0.0;   // SINR threshold, linear
};

struct TermContribution {
  std::size_t segment = 0;
  bool los = false;
  double value = 0.0;
};

struct CoverageResult {
  double value = 0.0;
  double abs_error_estimate = 0.0;
  std::vector<TermContribution> term_breakdown;
};

struct AseResult {
  double value = 0.0;  // bps/Hz/km^2
  double abs_error_estimate = 0.0;
};

/// Rejects models whose interference integral diverges: an unbounded segment
/// with an active branch whose exponent is <= 2. Throws ParameterError.
void check_interference_feasible(const PathLossModel& model);

/// Density (per km) of the event "the nearest BS sits at distance r in
/// segment `segment` and the link is LoS":
/// Pr_L(r) * exp(-pi r^2 lambda) * 2 pi r lambda.
/// Throws DomainError when r falls outside the segment's bounds.
double nearest_bs_pdf_los(const NetworkEnvironment& env, double lambda,
                          std::size_t segment, double r);

/// NLoS counterpart, weighted by 1 - Pr_L(r).
double nearest_bs_pdf_nlos(const NetworkEnvironment& env, double lambda,
                           std::size_t segment, double r);

/// Laplace transform of the aggregate interference seen from a serving
/// distance r, evaluated at s >= 0:
///   exp(-2 pi lambda Int_r^inf [sum of LoS/NLoS fading kernels] u du),
/// computed by adaptive quadrature with breakpoints at the segment
/// boundaries and kernel knees, and a reciprocal map for the tail. The
/// exponent carries quadrature error at most 1e-9 * max(1, |exponent|),
/// which bounds the transform's own absolute error by 1e-9. Works for any
/// valid model; this is the reference route the closed forms are checked
/// against.
double laplace_interference(const NetworkEnvironment& env, double lambda,
                            double r, double s);

/// Parameters of a two-segment 3GPP Case 1 model (same gain laws on both
/// sides of d1, linear LoS probability below d1, pure NLoS beyond).
struct Case1Params {
  double d1 = 0.0;
  double a_los = 0.0;
  double alpha_los = 0.0;
  double a_nlos = 0.0;
  double alpha_nlos = 0.0;
};

/// Recognizes the Case 1 shape; empty when the model does not match.
std::optional<Case1Params> case1_params(const NetworkEnvironment& env);

/// Closed-form Laplace transform at s = gamma r^alpha_L / (P A_L) for a
/// LoS-served user at r in (0, d1]. Product of interference-kernel integrals
/// over [r, d1] (both branches) and the pure-NLoS tail beyond d1.
double laplace_case1_los(const NetworkEnvironment& env, double lambda,
                         double gamma, double r);

/// Closed-form Laplace transform at s = gamma r^alpha_NL / (P A_NL) for an
/// NLoS-served user at r in (0, d1].
double laplace_case1_nlos_near(const NetworkEnvironment& env, double lambda,
                               double gamma, double r);

/// Closed-form Laplace transform at s = gamma r^alpha_NL / (P A_NL) for an
/// NLoS-served user at r > d1, where all interferers are NLoS.
double laplace_case1_nlos_far(const NetworkEnvironment& env, double lambda,
                              double gamma, double r);

/// Coverage probability P[SINR > gamma] for any valid model: sums the
/// per-(segment, branch) terms
///   T = Int exp(-gamma N0 / (P zeta(r))) L_I(gamma / (P zeta(r))) f(r) dr
/// by nested adaptive quadrature. abs_error_estimate <= 1e-6 on success.
CoverageResult coverage_general(const NetworkEnvironment& env,
                                const CoverageQuery& query);

/// Coverage probability for the Case 1 shape using the closed-form Laplace
/// transforms; only the outer one-dimensional r-integrals are numerical.
/// The far-LoS term is identically zero and is reported as such.
/// Throws UsageError when the model is not Case 1 shaped.
CoverageResult coverage_case1(const NetworkEnvironment& env,
                              const CoverageQuery& query);

/// Dispatches to coverage_case1 when the model has the Case 1 shape, else
/// coverage_general.
CoverageResult coverage_probability(const NetworkEnvironment& env,
                                    const CoverageQuery& query);

/// Area spectral efficiency lambda * E[log2(1+SINR); SINR > gamma0] in
/// bps/Hz/km^2, computed from the coverage CCDF by integration by parts:
///   lambda * (log2(1+gamma0) p(gamma0) + (1/ln 2) Int_gamma0^inf p(x)/(1+x) dx).
/// Relative error <= 1e-4.
AseResult area_spectral_efficiency(const NetworkEnvironment& env, double lambda,
                                   double gamma0);

}  // namespace scn

#endif  // SCN_ANALYTIC_HPP
