#ifndef SCN_SWEEP_HPP
#define SCN_SWEEP_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "scn/config.hpp"

namespace scn {

inline constexpr const char* kVersion = "0.1.0";

enum class SweepMode { coverage, ase, validate, lambda0, lambda1 };

SweepMode parse_sweep_mode(const std::string& name);

/// Everything a CLI run needs. Density grids are logarithmic
/// (points-per-decade); gamma lists drive coverage/validate rows, gamma0
/// lists drive ase/lambda1 rows. `threads` only affects wall time, never
/// the output bytes.
struct SweepSpec {
  SweepMode mode = SweepMode::coverage;
  double lambda_start = 1.0;
  double lambda_stop = 1e4;
  int points_per_decade = 10;
  std::vector<double> gammas = {1.0};
  std::vector<double> gamma0s = {10.0};
  std::uint64_t trials = 10000;
  std::uint64_t seed = 1;
  unsigned threads = 0;
  double slope_threshold = 0.9;
  std::string out_path;
};

/// Log-spaced grid from start to stop inclusive. Throws UsageError when the
/// grid would be empty or points_per_decade < 1.
std::vector<double> log_grid(double start, double stop, int points_per_decade);

/// Executes the sweep and writes the CSV artifact (fixed header, rows sorted
/// by (lambda, gamma), 9-significant-digit values, '#'-prefixed metadata,
/// '\n' endings). Returns the number of failed validation rows (only the
/// validate mode can return nonzero). Identical spec + seed give a
/// byte-identical file.
int run_sweep(const SweepSpec& spec, const ModelConfig& config);

}  // namespace scn

#endif  // SCN_SWEEP_HPP
