#include "scn/simulator.hpp"

#include <atomic>
#include <cmath>
#include <limits>
#include <thread>

#include "scn/errors.hpp"

namespace scn {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr std::uint64_t kBlockTrials = 64;

void validate_config(const SimulationConfig& config) {
  if (!(config.lambda > 0.0)) throw DomainError("simulation: lambda must be positive");
  if (!(config.region_radius > 0.0)) {
    throw DomainError("simulation: region_radius must be positive");
  }
  if (config.trials < 1) throw DomainError("simulation: trials must be >= 1");
  for (double g : config.gamma_list) {
    if (!(g > 0.0)) throw DomainError("simulation: gamma values must be positive");
  }
  if (!(config.gamma0 > 0.0)) throw DomainError("simulation: gamma0 must be positive");
}

void fill_network(const SimulationConfig& config, const NetworkEnvironment& env,
                  rng::Xoshiro256pp& stream, RealizedNetwork& net) {
  net.bs_positions.clear();
  net.los_flags.clear();
  net.fading_gains.clear();

  const double mean = config.lambda * kPi * config.region_radius * config.region_radius;
  const std::uint64_t count = rng::poisson(stream, mean);
  net.bs_positions.reserve(count);
  net.los_flags.reserve(count);
  net.fading_gains.reserve(count);

  for (std::uint64_t i = 0; i < count; ++i) {
    // sqrt draw on (0, 1] keeps r strictly positive.
    const double r = config.region_radius * std::sqrt(stream.uniform01_open_low());
    const double theta = 2.0 * kPi * stream.uniform01();
    net.bs_positions.emplace_back(r * std::cos(theta), r * std::sin(theta));
    net.los_flags.push_back(stream.uniform01() < los_probability(env.model, r));
    net.fading_gains.push_back(stream.exponential());
  }
}

struct BlockSums {
  std::vector<std::uint64_t> covered;  // per gamma
  double rate_sum = 0.0;
  double rate_sq_sum = 0.0;
  std::uint64_t empty = 0;
};

}  // namespace

double default_region_radius(double lambda) {
  if (!(lambda > 0.0)) throw DomainError("default_region_radius: lambda must be positive");
  return std::max(2.0, 6.0 / std::sqrt(kPi * lambda));
}

RealizedNetwork generate_network(const SimulationConfig& config,
                                 const NetworkEnvironment& env,
                                 rng::Xoshiro256pp& stream) {
  validate_config(config);
  RealizedNetwork net;
  fill_network(config, env, stream, net);
  return net;
}

std::optional<double> sinr_of_typical_ue(const RealizedNetwork& network,
                                         const NetworkEnvironment& env) {
  const std::size_t n = network.size();
  if (n == 0) return std::nullopt;

  std::size_t serving = 0;
  double serving_d2 = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    const auto& [x, y] = network.bs_positions[i];
    const double d2 = x * x + y * y;
    if (d2 < serving_d2) {
      serving_d2 = d2;
      serving = i;
    }
  }

  const double p = env.tx_power_mw;
  double interference = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (i == serving) continue;
    const auto& [x, y] = network.bs_positions[i];
    const double r = std::sqrt(x * x + y * y);
    interference += p * path_gain(env.model, r, network.los_flags[i]) *
                    network.fading_gains[i];
  }

  const double r = std::sqrt(serving_d2);
  const double signal =
      p * path_gain(env.model, r, network.los_flags[serving]) *
      network.fading_gains[serving];
  return signal / (interference + env.noise_mw);
}

namespace {

EmpiricalResult run_trials(const SimulationConfig& config,
                           const NetworkEnvironment& env, unsigned threads) {
  validate_config(config);
  validate(env.model);

  const std::uint64_t n_trials = config.trials;
  const std::uint64_t n_blocks = (n_trials + kBlockTrials - 1) / kBlockTrials;
  const std::size_t n_gamma = config.gamma_list.size();

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(
      std::min<std::uint64_t>(threads, std::max<std::uint64_t>(1, n_blocks)));

  std::vector<BlockSums> blocks(n_blocks);
  std::atomic<std::uint64_t> next_block{0};

  auto worker = [&]() {
    RealizedNetwork net;
    for (;;) {
      const std::uint64_t b = next_block.fetch_add(1);
      if (b >= n_blocks) return;
      BlockSums sums;
      sums.covered.assign(n_gamma, 0);
      const std::uint64_t begin = b * kBlockTrials;
      const std::uint64_t end = std::min(begin + kBlockTrials, n_trials);
      for (std::uint64_t trial = begin; trial < end; ++trial) {
        rng::Xoshiro256pp stream(config.seed, trial);
        fill_network(config, env, stream, net);
        const std::optional<double> sinr = sinr_of_typical_ue(net, env);
        if (!sinr) {
          ++sums.empty;
          continue;  // outage: not covered, rate 0
        }
        for (std::size_t g = 0; g < n_gamma; ++g) {
          if (*sinr > config.gamma_list[g]) ++sums.covered[g];
        }
        if (*sinr > config.gamma0) {
          const double rate = std::log2(1.0 + *sinr);
          sums.rate_sum += rate;
          sums.rate_sq_sum += rate * rate;
        }
      }
      blocks[b] = std::move(sums);
    }
  };

  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  // Sequential reduction in block order keeps the result independent of the
  // number of workers.
  std::vector<std::uint64_t> covered(n_gamma, 0);
  double rate_sum = 0.0;
  double rate_sq_sum = 0.0;
  std::uint64_t empty = 0;
  for (const auto& b : blocks) {
    for (std::size_t g = 0; g < n_gamma; ++g) covered[g] += b.covered[g];
    rate_sum += b.rate_sum;
    rate_sq_sum += b.rate_sq_sum;
    empty += b.empty;
  }

  const double n = static_cast<double>(n_trials);
  EmpiricalResult out;
  out.trials = n_trials;
  out.empty_network_trials = empty;
  out.coverage.reserve(n_gamma);
  for (std::size_t g = 0; g < n_gamma; ++g) {
    const double p_hat = static_cast<double>(covered[g]) / n;
    double se = 0.0;
    if (n_trials > 1) {
      const double sample_var = n * p_hat * (1.0 - p_hat) / (n - 1.0);
      se = std::sqrt(sample_var / n);
    }
    out.coverage.emplace_back(config.gamma_list[g], Estimate{p_hat, se});
  }

  const double mean_rate = rate_sum / n;
  double rate_se = 0.0;
  if (n_trials > 1) {
    const double var = std::max(0.0, (rate_sq_sum - n * mean_rate * mean_rate) / (n - 1.0));
    rate_se = std::sqrt(var / n);
  }
  out.ase = Estimate{config.lambda * mean_rate, config.lambda * rate_se};
  return out;
}

}  // namespace

EmpiricalResult estimate_coverage(const SimulationConfig& config,
                                  const NetworkEnvironment& env,
                                  unsigned threads) {
  return run_trials(config, env, threads);
}

EmpiricalResult estimate_ase(const SimulationConfig& config,
                             const NetworkEnvironment& env, unsigned threads) {
  return run_trials(config, env, threads);
}

}  // namespace scn
