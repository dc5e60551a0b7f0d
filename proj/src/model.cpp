#include "scn/model.hpp"

#include <cmath>
#include <string>

#include "scn/errors.hpp"

namespace scn {

double evaluate_los_probability(const LosProbabilityFn& fn, double r) {
  if (r <= 0.0) throw DomainError("los probability: r must be positive");
  if (const auto* linear = std::get_if<Linear3gppLos>(&fn)) {
    if (r > linear->d1_km) return 0.0;
    return 1.0 - r / linear->d1_km;
  }
  return std::get<ConstantLos>(fn).p;
}

std::size_t PathLossModel::segment_index(double r) const {
  if (r <= 0.0) throw DomainError("path loss model: r must be positive");
  for (std::size_t i = 0; i < segments.size(); ++i) {
    if (r > segments[i].d_lo && r <= segments[i].d_hi) return i;
  }
  // Unreachable for a validated model; the last segment is unbounded.
  throw DomainError("path loss model: no segment contains r=" + std::to_string(r));
}

void validate(const PathLossModel& model) {
  if (model.segments.empty()) {
    throw ParameterError("path loss model needs at least one segment");
  }
  if (model.segments.front().d_lo != 0.0) {
    throw ParameterError("first segment must start at d_lo = 0");
  }
  if (!std::isinf(model.segments.back().d_hi)) {
    throw ParameterError("last segment must extend to infinity");
  }
  for (std::size_t i = 0; i < model.segments.size(); ++i) {
    const auto& s = model.segments[i];
    if (!(s.d_lo < s.d_hi)) {
      throw ParameterError("segment " + std::to_string(i) + ": d_lo must be < d_hi");
    }
    if (!(s.a_los > 0.0) || !(s.a_nlos > 0.0) || !(s.alpha_los > 0.0) ||
        !(s.alpha_nlos > 0.0)) {
      throw ParameterError("segment " + std::to_string(i) +
                           ": gains and exponents must be positive");
    }
    if (i + 1 < model.segments.size() &&
        model.segments[i + 1].d_lo != s.d_hi) {
      throw ParameterError("segments must tile (0, inf) without gaps: boundary " +
                           std::to_string(i));
    }
    if (const auto* constant = std::get_if<ConstantLos>(&s.los_prob)) {
      if (constant->p < 0.0 || constant->p > 1.0) {
        throw ParameterError("constant LoS probability must lie in [0, 1]");
      }
    } else if (const auto* linear = std::get_if<Linear3gppLos>(&s.los_prob)) {
      if (!(linear->d1_km > 0.0)) {
        throw ParameterError("linear LoS probability needs d1 > 0");
      }
    }
  }
}

double path_gain(const PathLossModel& model, double r, bool los) {
  const auto& seg = model.segments[model.segment_index(r)];
  return los ? seg.a_los * std::pow(r, -seg.alpha_los)
             : seg.a_nlos * std::pow(r, -seg.alpha_nlos);
}

double los_probability(const PathLossModel& model, double r) {
  return evaluate_los_probability(model.segments[model.segment_index(r)].los_prob, r);
}

NetworkEnvironment preset_3gpp_case1() {
  constexpr double d1 = 0.3;
  constexpr double alpha_los = 2.09;
  constexpr double alpha_nlos = 3.75;
  // 10^-4.11 and 10^-3.29 at 1 m; rescaled to the 1 km reference.
  const double a_los = std::pow(10.0, (-41.1 - 30.0 * alpha_los) / 10.0);
  const double a_nlos = std::pow(10.0, (-32.9 - 30.0 * alpha_nlos) / 10.0);

  PathLossSegment near{0.0, d1, a_los, alpha_los, a_nlos, alpha_nlos,
                       Linear3gppLos{d1}};
  PathLossSegment far{d1, std::numeric_limits<double>::infinity(),
                      a_los, alpha_los, a_nlos, alpha_nlos, ConstantLos{0.0}};

  NetworkEnvironment env;
  env.tx_power_mw = dbm_to_mw(24.0);
  env.noise_mw = dbm_to_mw(-95.0);
  env.model.segments = {near, far};
  validate(env.model);
  return env;
}

NetworkEnvironment preset_single_slope(double alpha, double a, double tx_power_mw,
                                       double noise_mw) {
  if (!(alpha > 2.0)) {
    throw ParameterError("single-slope model requires alpha > 2, got alpha=" +
                         std::to_string(alpha));
  }
  if (!(a > 0.0)) throw ParameterError("single-slope model requires a > 0");
  if (!(tx_power_mw > 0.0)) throw ParameterError("tx power must be positive");
  if (noise_mw < 0.0) throw ParameterError("noise power must be non-negative");

  PathLossSegment only{0.0, std::numeric_limits<double>::infinity(),
                       a, alpha, a, alpha, ConstantLos{0.0}};
  NetworkEnvironment env;
  env.tx_power_mw = tx_power_mw;
  env.noise_mw = noise_mw;
  env.model.segments = {only};
  validate(env.model);
  return env;
}

}  // namespace scn
