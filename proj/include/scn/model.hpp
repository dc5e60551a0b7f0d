#ifndef SCN_MODEL_HPP
#define SCN_MODEL_HPP

#include <cmath>
#include <cstddef>
#include <limits>
#include <variant>
#include <vector>

namespace scn {

// Units are fixed throughout the library: distances in km, powers in mW,
// gains linear, BS densities in BSs/km^2. dB/dBm values are converted at the
// config boundary only.

/// LoS probability of the 3GPP Case 1 model: 1 - r/d1 for 0 < r <= d1 and 0
/// beyond.
struct Linear3gppLos {
  double d1_km = 0.0;
};

/// Distance-independent LoS probability; p = 0 gives a pure-NLoS segment.
struct ConstantLos {
  double p = 0.0;
};

using LosProbabilityFn = std::variant<Linear3gppLos, ConstantLos>;

/// Evaluates a LoS probability function at distance r > 0; always in [0, 1].
double evaluate_los_probability(const LosProbabilityFn& fn, double r);

/// One piece of the path loss model: distances in (d_lo, d_hi] follow the
/// LoS law a_los * r^-alpha_los with probability given by los_prob, and the
/// NLoS law a_nlos * r^-alpha_nlos otherwise. Gains are referenced to
/// r = 1 km.
struct PathLossSegment {
  double d_lo = 0.0;
  double d_hi = std::numeric_limits<double>::infinity();
  double a_los = 0.0;
  double alpha_los = 0.0;
  double a_nlos = 0.0;
  double alpha_nlos = 0.0;
  LosProbabilityFn los_prob = ConstantLos{0.0};
};

/// Piecewise path loss model. Segments must tile (0, inf): the first d_lo is
/// 0, the last d_hi is inf, and consecutive segments share their boundary.
/// A distance r belongs to the segment with d_lo < r <= d_hi.
struct PathLossModel {
  std::vector<PathLossSegment> segments;

  /// Index of the segment containing r. Throws DomainError for r <= 0.
  std::size_t segment_index(double r) const;
};

/// Validates the tiling and positivity invariants; throws ParameterError.
void validate(const PathLossModel& model);

/// Fixed physical context for every query: transmit power, AWGN noise power
/// and the path loss model.
struct NetworkEnvironment {
  double tx_power_mw = 0.0;
  double noise_mw = 0.0;
  PathLossModel model;
};

/// Path gain at distance r for the chosen propagation branch.
/// Throws DomainError for r <= 0.
double path_gain(const PathLossModel& model, double r, bool los);

/// LoS probability at distance r. Throws DomainError for r <= 0.
double los_probability(const PathLossModel& model, double r);

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
inline double dbm_to_mw(double dbm) { return std::pow(10.0, dbm / 10.0); }

/// Two-segment model recommended by 3GPP (TR 36.828 pico parameters): linear
/// LoS probability with d1 = 0.3 km, alpha_los = 2.09, alpha_nlos = 3.75,
/// field-test gain constants 10^-4.11 (LoS) and 10^-3.29 (NLoS) referenced to
/// r = 1 m, P = 24 dBm, N0 = -95 dBm. The same gain laws apply on both sides
/// of d1; only the LoS probability changes.
NetworkEnvironment preset_3gpp_case1();

/// Single-slope baseline without LoS/NLoS differentiation: one segment over
/// (0, inf) with the NLoS law a * r^-alpha and LoS probability identically 0.
/// Requires alpha > 2 (interference integral diverges otherwise); throws
/// ParameterError. `a` is the linear gain at r = 1 km.
NetworkEnvironment preset_single_slope(double alpha, double a, double tx_power_mw,
                                       double noise_mw);

}  // namespace scn

#endif  // SCN_MODEL_HPP
