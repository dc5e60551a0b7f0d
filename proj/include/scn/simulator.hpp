#ifndef SCN_SIMULATOR_HPP
#define SCN_SIMULATOR_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "scn/model.hpp"
#include "scn/rng.hpp"

namespace scn {

struct SimulationConfig {
  double lambda = 0.0;         // BSs/km^2
  double region_radius = 0.0;  // km, disc centred on the typical UE
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::vector<double> gamma_list;  // SINR thresholds for coverage estimation
  double gamma0 = 10.0;            // minimum working SINR for the ASE estimate
};

/// Default disc radius: at least 2 km, grown at sparse densities so the
/// expected BS count stays >= 36. Beyond this radius the neglected NLoS
/// interference is far below the noise floor for the 3GPP parameters.
double default_region_radius(double lambda);

/// One Poisson deployment as seen from the typical UE at the origin.
/// los_flags[i] is drawn per link with probability Pr_L(r_i); fading gains
/// are i.i.d. unit-mean exponential.
struct RealizedNetwork {
  std::vector<std::pair<double, double>> bs_positions;  // km
  std::vector<bool> los_flags;
  std::vector<double> fading_gains;

  std::size_t size() const { return bs_positions.size(); }
};

struct Estimate {
  double value = 0.0;
  double std_error = 0.0;
};

struct EmpiricalResult {
  /// (gamma, estimate) in the order of SimulationConfig::gamma_list.
  std::vector<std::pair<double, Estimate>> coverage;
  Estimate ase;  // bps/Hz/km^2
  std::uint64_t empty_network_trials = 0;
  std::uint64_t trials = 0;
};

/// Draws one network realization: BS count ~ Poisson(lambda pi R^2),
/// positions uniform on the disc, one LoS flag and one fading gain per BS.
RealizedNetwork generate_network(const SimulationConfig& config,
                                 const NetworkEnvironment& env,
                                 rng::Xoshiro256pp& stream);

/// SINR of the typical UE: serving BS is the nearest one, all others
/// interfere with their own LoS state and fading. Empty networks return
/// nullopt (outage).
std::optional<double> sinr_of_typical_ue(const RealizedNetwork& network,
                                         const NetworkEnvironment& env);

/// Runs config.trials independent realizations and estimates coverage for
/// every gamma in gamma_list plus the ASE at gamma0. Outage (empty network)
/// counts as not covered and contributes rate 0. Results are bit-identical
/// for a fixed seed regardless of `threads` (0 = hardware concurrency).
EmpiricalResult estimate_coverage(const SimulationConfig& config,
                                  const NetworkEnvironment& env,
                                  unsigned threads = 0);

/// Same trial loop as estimate_coverage; named accessor for the ASE use.
EmpiricalResult estimate_ase(const SimulationConfig& config,
                             const NetworkEnvironment& env,
                             unsigned threads = 0);

}  // namespace scn

#endif  // SCN_SIMULATOR_HPP
