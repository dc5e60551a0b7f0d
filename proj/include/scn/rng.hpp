#ifndef SCN_RNG_HPP
#define SCN_RNG_HPP

#include <cmath>
#include <cstdint>

namespace scn::rng {

inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// xoshiro256++ with explicit state, seeded through splitmix64 so that any
/// 64-bit key (including 0) yields a usable state. Streams derived from
/// (root_seed, stream_index) pairs are independent of evaluation order,
/// which is what makes parallel Monte Carlo runs reproducible.
class Xoshiro256pp {
 public:
  Xoshiro256pp() : Xoshiro256pp(0, 0) {}

  Xoshiro256pp(std::uint64_t root_seed, std::uint64_t stream_index) {
    std::uint64_t sm = root_seed;
    (void)splitmix64(sm);
    sm ^= 0xA3EC647659359ACDULL * (stream_index + 1);
    for (auto& word : state_) word = splitmix64(sm);
  }

  std::uint64_t next_u64() {
    const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  /// Uniform on [0, 1).
  double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform on (0, 1].
  double uniform01_open_low() {
    return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
  }

  /// Unit-mean exponential.
  double exponential() { return -std::log(uniform01_open_low()); }

 private:
  static constexpr std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }
  std::uint64_t state_[4];
};

/// Poisson sampler valid for any mean >= 0. Small means use Knuth's product
/// method; large means use Hormann's PTRS transformed rejection, which never
/// underflows and is exact.
template <class Engine>
std::uint64_t poisson(Engine& eng, double mean) {
  if (mean <= 0.0) return 0;
  if (mean < 30.0) {
    const double limit = std::exp(-mean);
    std::uint64_t k = 0;
    double prod = eng.uniform01_open_low();
    while (prod > limit) {
      ++k;
      prod *= eng.uniform01_open_low();
    }
    return k;
  }
  const double log_mean = std::log(mean);
  const double b = 0.931 + 2.53 * std::sqrt(mean);
  const double a = -0.059 + 0.02483 * b;
  const double inv_alpha = 1.1239 + 1.1328 / (b - 3.4);
  const double v_r = 0.9277 - 3.6224 / (b - 2.0);
  for (;;) {
    const double u = eng.uniform01() - 0.5;
    const double v = eng.uniform01_open_low();
    const double us = 0.5 - std::fabs(u);
    const double kf = std::floor((2.0 * a / us + b) * u + mean + 0.43);
    if (us >= 0.07 && v <= v_r) return static_cast<std::uint64_t>(kf);
    if (kf < 0.0 || (us < 0.013 && v > us)) continue;
    if (std::log(v * inv_alpha / (a / (us * us) + b)) <=
        kf * log_mean - mean - std::lgamma(kf + 1.0)) {
      return static_cast<std::uint64_t>(kf);
    }
  }
}

}  // namespace scn::rng

#endif  // SCN_RNG_HPP
