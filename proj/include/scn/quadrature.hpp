#ifndef SCN_QUADRATURE_HPP
#define SCN_QUADRATURE_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <span>
#include <vector>

namespace scn::quad {

struct Options {
  double abs_tol = 1e-10;
  double rel_tol = 0.0;
  int max_intervals = 2000;
};

struct Result {
  double value = 0.0;
  double abs_error = 0.0;    // estimated, not guaranteed
  int intervals = 0;
  bool converged = true;

  Result& operator+=(const Result& o) {
    value += o.value;
    abs_error += o.abs_error;
    intervals += o.intervals;
    converged = converged && o.converged;
    return *this;
  }
};

namespace detail {

// Gauss-Kronrod 7-15 pair on [-1, 1] (QUADPACK dqk15 constants).
inline constexpr double kKronrodNodes[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

inline constexpr double kKronrodWeights[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

inline constexpr double kGaussWeights[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct Panel {
  double lo, hi;
  double value;
  double error;
};

// One Gauss-Kronrod 7-15 evaluation with the QUADPACK error heuristic.
template <class F>
Panel gk15(F&& f, double lo, double hi) {
  const double center = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);

  double fv[15];
  const double fc = f(center);
  fv[14] = fc;
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kKronrodNodes[j];
    fv[2 * j] = f(center - dx);
    fv[2 * j + 1] = f(center + dx);
  }

  double resk = kKronrodWeights[7] * fc;
  double resg = kGaussWeights[3] * fc;
  double resabs = kKronrodWeights[7] * std::fabs(fc);
  for (int j = 0; j < 7; ++j) {
    const double sum = fv[2 * j] + fv[2 * j + 1];
    resk += kKronrodWeights[j] * sum;
    resabs += kKronrodWeights[j] * (std::fabs(fv[2 * j]) + std::fabs(fv[2 * j + 1]));
    if (j % 2 == 1) resg += kGaussWeights[j / 2] * sum;
  }

  const double mean = resk * 0.5;
  double resasc = kKronrodWeights[7] * std::fabs(fc - mean);
  for (int j = 0; j < 7; ++j) {
    resasc += kKronrodWeights[j] *
              (std::fabs(fv[2 * j] - mean) + std::fabs(fv[2 * j + 1] - mean));
  }

  double err = std::fabs((resk - resg) * half);
  const double resasc_h = resasc * half;
  if (resasc_h != 0.0 && err != 0.0) {
    err = resasc_h * std::min(1.0, std::pow(200.0 * err / resasc_h, 1.5));
  }
  const double eps = std::numeric_limits<double>::epsilon();
  const double tiny = std::numeric_limits<double>::min();
  const double resabs_h = resabs * std::fabs(half);
  if (resabs_h > tiny / (50.0 * eps)) {
    err = std::max(err, 50.0 * eps * resabs_h);
  }
  return Panel{lo, hi, resk * half, err};
}

}  // namespace detail

/// Globally adaptive Gauss-Kronrod integration of f over [lo, hi].
/// The worst panel (largest error estimate) is bisected until the summed
/// error estimate meets max(abs_tol, rel_tol*|I|) or the interval budget
/// runs out, in which case `converged` is false.
template <class F>
Result integrate(F&& f, double lo, double hi, const Options& opt = {}) {
  Result out;
  if (lo == hi) return out;

  std::vector<detail::Panel> panels;
  panels.reserve(64);
  panels.push_back(detail::gk15(f, lo, hi));

  double total_value = panels[0].value;
  double total_error = panels[0].error;

  auto tolerance = [&](double v) {
    return std::max(opt.abs_tol, opt.rel_tol * std::fabs(v));
  };

  while (total_error > tolerance(total_value) &&
         static_cast<int>(panels.size()) < opt.max_intervals) {
    std::size_t worst = 0;
    for (std::size_t i = 1; i < panels.size(); ++i) {
      if (panels[i].error > panels[worst].error) worst = i;
    }
    const detail::Panel p = panels[worst];
    const double mid = 0.5 * (p.lo + p.hi);
    if (mid <= p.lo || mid >= p.hi) break;  // cannot refine further

    const detail::Panel left = detail::gk15(f, p.lo, mid);
    const detail::Panel right = detail::gk15(f, mid, p.hi);
    total_value += left.value + right.value - p.value;
    total_error += left.error + right.error - p.error;
    panels[worst] = left;
    panels.push_back(right);
  }

  out.value = total_value;
  out.abs_error = total_error;
  out.intervals = static_cast<int>(panels.size());
  out.converged = total_error <= tolerance(total_value);
  return out;
}

/// Integrates over [points[0], points[n-1]] with forced breakpoints at every
/// interior point. The tolerance is split evenly across the pieces.
template <class F>
Result integrate_segments(F&& f, std::span<const double> points,
                          const Options& opt = {}) {
  Result out;
  if (points.size() < 2) return out;
  Options piece = opt;
  const double n = static_cast<double>(points.size() - 1);
  piece.abs_tol = opt.abs_tol / n;
  for (std::size_t i = 0; i + 1 < points.size(); ++i) {
    out += integrate(f, points[i], points[i + 1], piece);
  }
  out.converged = out.abs_error <= std::max(opt.abs_tol, opt.rel_tol * std::fabs(out.value));
  return out;
}

/// Integrates f over the half line [lo, inf) through the map u = lo + v/(1-v),
/// v in [0,1). Suited to integrands with strong decay; the transformed
/// integrand must vanish as v -> 1.
template <class F>
Result integrate_half_line(F&& f, double lo, const Options& opt = {}) {
  auto g = [&](double v) {
    const double om = 1.0 - v;
    const double u = lo + v / om;
    const double jac = 1.0 / (om * om);
    if (!std::isfinite(u) || !std::isfinite(jac)) return 0.0;
    const double fu = f(u);
    return fu == 0.0 ? 0.0 : fu * jac;
  };
  return integrate(g, 0.0, 1.0, opt);
}

}  // namespace scn::quad

#endif  // SCN_QUADRATURE_HPP
