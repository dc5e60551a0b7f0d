#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "scn/errors.hpp"
#include "scn/sweep.hpp"

int main(int argc, char** argv) {
  CLI::App app{
      "scnperf - coverage probability and area spectral efficiency sweeps for "
      "Poisson small-cell networks with LoS/NLoS path loss"};

  std::string mode_name;
  std::string config_path;
  std::string out_path;
  scn::SweepSpec spec;

  app.add_option("--mode", mode_name,
                 "coverage | ase | validate | lambda0 | lambda1")
      ->required();
  app.add_option("--lambda-start", spec.lambda_start,
                 "density grid start (BSs/km^2); bracket low for lambda0")
      ->capture_default_str();
  app.add_option("--lambda-stop", spec.lambda_stop,
                 "density grid stop (BSs/km^2); bracket high for lambda0")
      ->capture_default_str();
  app.add_option("--points-per-decade", spec.points_per_decade,
                 "grid resolution of the logarithmic density grid")
      ->capture_default_str();
  app.add_option("--gamma", spec.gammas,
                 "SINR thresholds (repeatable; coverage/validate/lambda0)")
      ->expected(-1);
  app.add_option("--gamma0", spec.gamma0s,
                 "minimum working SINR values (repeatable; ase/lambda1)")
      ->expected(-1);
  app.add_option("--trials", spec.trials, "Monte Carlo trials per grid point")
      ->capture_default_str();
  app.add_option("--seed", spec.seed, "root seed for the Monte Carlo streams")
      ->capture_default_str();
  app.add_option("--threads", spec.threads,
                 "worker threads for the simulator (0 = hardware)")
      ->capture_default_str();
  app.add_option("--slope-threshold", spec.slope_threshold,
                 "log-log ASE slope defining the lambda1 recovery")
      ->capture_default_str();
  app.add_option("--out", out_path, "output CSV path")->required();
  app.add_option("--config", config_path,
                 "key=value model config file (default: built-in 3GPP Case 1)");

  CLI11_PARSE(app, argc, argv);

  try {
    spec.mode = scn::parse_sweep_mode(mode_name);
    spec.out_path = out_path;
    const scn::ModelConfig config = config_path.empty()
                                        ? scn::ModelConfig{}
                                        : scn::load_config_file(config_path);
    const int failed = scn::run_sweep(spec, config);
    if (failed > 0) {
      std::fprintf(stderr, "scnperf: %d validation row(s) failed\n", failed);
      return 1;
    }
    return 0;
  } catch (const scn::UsageError& e) {
    std::fprintf(stderr, "scnperf: usage error: %s\n", e.what());
    return 2;
  } catch (const scn::ParameterError& e) {
    std::fprintf(stderr, "scnperf: parameter error: %s\n", e.what());
    return 3;
  } catch (const scn::Error& e) {
    std::fprintf(stderr, "scnperf: %s\n", e.what());
    return 4;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "scnperf: unexpected error: %s\n", e.what());
    return 5;
  }
}
