#include "scn/special_functions.hpp"

#include <cmath>
#include <string>

#include "scn/errors.hpp"
#include "scn/quadrature.hpp"

namespace scn {

namespace {

constexpr double kTermRatioTol = 1e-14;
constexpr int kMaxSeriesTerms = 10000;
constexpr double kSeriesArgLimit = 0.95;  // Pfaff argument beyond which the series is too slow

bool is_nonpositive_integer(double x) {
  return x <= 0.0 && std::fabs(x - std::round(x)) < 1e-12;
}

// Plain Gauss series at 0 <= w < 1. Term recurrence:
// term_{k+1} = term_k * (a+k)(b+k) / ((c+k)(k+1)) * w.
double gauss_series(double a, double b, double c, double w) {
  double term = 1.0;
  double sum = 1.0;
  for (int k = 0; k < kMaxSeriesTerms; ++k) {
    term *= (a + k) * (b + k) / ((c + k) * (k + 1.0)) * w;
    sum += term;
    if (std::fabs(term) <= kTermRatioTol * std::fabs(sum)) return sum;
  }
  throw NumericalError("hyp2f1 series did not converge within " +
                           std::to_string(kMaxSeriesTerms) + " terms",
                       sum);
}

// Euler integral representation, used when the transformed series argument is
// close to 1 (i.e. |z| large):
//   2F1(a,b;c;z) = Gamma(c)/(Gamma(b)Gamma(c-b)) *
//                  Int_0^1 s^(b-1) (1-s)^(c-b-1) (1-z s)^(-a) ds,  c > b > 0.
// For b < 1 the substitution s = v^(1/b) removes the s -> 0 singularity and
// turns the prefactor into Gamma(c)/(Gamma(b+1)Gamma(c-b)).
double euler_integral(double a, double b, double c, double z) {
  if (!(c > b && b > 0.0)) {
    if (c > a && a > 0.0) {
      std::swap(a, b);  // 2F1 is symmetric in a and b
    } else {
      throw NumericalError(
          "hyp2f1 fallback requires c > b > 0 (or c > a > 0) for the Euler "
          "integral; got a=" + std::to_string(a) + " b=" + std::to_string(b) +
              " c=" + std::to_string(c),
          std::numeric_limits<double>::quiet_NaN());
    }
  }

  const double cb1 = c - b - 1.0;
  quad::Options opt;
  opt.abs_tol = 1e-305;
  opt.rel_tol = 1e-12;
  opt.max_intervals = 800;

  // The integrand turns over where |z| s = 1; forcing breakpoints around the
  // turnover keeps the adaptive refinement shallow even for huge |z|.
  auto layered_points = [](double turnover) {
    std::vector<double> pts{0.0};
    for (double p : {turnover / 8.0, turnover, 8.0 * turnover}) {
      if (p > 0.0 && p < 1.0) pts.push_back(p);
    }
    pts.push_back(1.0);
    return pts;
  };

  quad::Result r;
  double log_prefactor;
  if (b < 1.0) {
    const double inv_b = 1.0 / b;
    const auto pts = layered_points(std::pow(-1.0 / z, b));
    r = quad::integrate_segments(
        [&](double v) {
          const double s = std::pow(v, inv_b);
          const double core = std::pow(1.0 - z * s, -a);
          return cb1 == 0.0 ? core : std::pow(1.0 - s, cb1) * core;
        },
        pts, opt);
    log_prefactor = std::lgamma(c) - std::lgamma(b + 1.0) - std::lgamma(c - b);
  } else {
    const auto pts = layered_points(-1.0 / z);
    r = quad::integrate_segments(
        [&](double s) {
          const double core = std::pow(1.0 - z * s, -a);
          const double head = std::pow(s, b - 1.0);
          return cb1 == 0.0 ? head * core : head * std::pow(1.0 - s, cb1) * core;
        },
        pts, opt);
    log_prefactor = std::lgamma(c) - std::lgamma(b) - std::lgamma(c - b);
  }
  if (!r.converged) {
    throw NumericalError("hyp2f1 Euler-integral quadrature did not converge",
                         r.value * std::exp(log_prefactor));
  }
  return r.value * std::exp(log_prefactor);
}

}  // namespace

double hyp2f1_nonpos(double a, double b, double c, double z) {
  if (is_nonpositive_integer(c)) {
    throw DomainError("hyp2f1: c must not be a non-positive integer (c=" +
                      std::to_string(c) + ")");
  }
  if (z > 0.0) {
    throw DomainError("hyp2f1_nonpos: z must be <= 0 (z=" + std::to_string(z) + ")");
  }
  if (z == 0.0 || a == 0.0 || b == 0.0) return 1.0;

  const double w = z / (z - 1.0);  // in (0, 1)
  if (w <= kSeriesArgLimit) {
    // Pfaff: 2F1(a,b;c;z) = (1-z)^(-a) 2F1(a, c-b; c; w).
    return std::pow(1.0 - z, -a) * gauss_series(a, c - b, c, w);
  }
  return euler_integral(a, b, c, z);
}

double hyp2f1_nonpos(const Hyp2f1Params& p) {
  return hyp2f1_nonpos(p.a, p.b, p.c, p.z);
}

double interference_integral_near(double alpha, double beta, double t, double d) {
  if (alpha <= 0.0 || beta < 0.0 || t < 0.0 || d < 0.0) {
    throw DomainError("interference_integral_near: requires alpha > 0, beta >= 0, "
                      "t >= 0, d >= 0");
  }
  if (d == 0.0) return 0.0;
  const double prefactor = std::pow(d, beta + 1.0) / (beta + 1.0);
  if (t == 0.0) return prefactor;
  const double ratio = (beta + 1.0) / alpha;
  return prefactor *
         hyp2f1_nonpos(1.0, ratio, 1.0 + ratio, -t * std::pow(d, alpha));
}

double interference_integral_far(double alpha, double beta, double t, double d) {
  const double margin = alpha - beta - 1.0;
  if (std::fabs(margin) < 1e-6) {
    throw DomainError(
        "interference_integral_far: alpha - beta - 1 is within 1e-6 of the "
        "divergence boundary; check the path loss exponents");
  }
  if (margin <= 0.0) {
    throw DomainError("interference_integral_far: requires alpha - beta - 1 > 0, "
                      "the tail integral diverges otherwise");
  }
  if (!(t > 0.0) || !(d > 0.0)) {
    throw DomainError("interference_integral_far: requires t > 0 and d > 0");
  }
  const double ratio = (beta + 1.0) / alpha;
  const double prefactor = std::pow(d, -margin) / (t * margin);
  return prefactor *
         hyp2f1_nonpos(1.0, 1.0 - ratio, 2.0 - ratio, -1.0 / (t * std::pow(d, alpha)));
}

}  // namespace scn
