#ifndef SCN_CONFIG_HPP
#define SCN_CONFIG_HPP

#include <string>

#include "scn/model.hpp"

namespace scn {

/// Parameter-level view of an environment, mirroring the config file schema.
/// Gain constants a_los_db / a_nlos_db are the field-test values in dB
/// referenced to r = 1 m (the 3GPP TR 36.828 convention); they are rescaled
/// to the library's 1 km reference when the environment is built.
struct ModelConfig {
  std::string model = "3gpp_case1";  // or "single_slope"
  double d1_km = 0.3;
  double alpha_los = 2.09;
  double alpha_nlos = 3.75;
  double a_los_db = -41.1;
  double a_nlos_db = -32.9;
  double tx_power_dbm = 24.0;
  double noise_dbm = -95.0;
};

/// Parses the plain UTF-8 key=value config format. Blank lines and lines
/// starting with '#' are ignored. Unknown keys, duplicate keys, malformed
/// lines and bad values raise UsageError naming the offending line number.
ModelConfig parse_config(const std::string& text);

/// Reads and parses a config file; UsageError if the file cannot be opened.
ModelConfig load_config_file(const std::string& path);

/// Serializes with round-trip-exact number formatting: parsing the output
/// reproduces the struct bit for bit.
std::string serialize_config(const ModelConfig& cfg);

/// Builds the runtime environment (km/mW units) from the config parameters.
/// single_slope uses the NLoS law only and requires alpha_nlos > 2.
NetworkEnvironment to_environment(const ModelConfig& cfg);

}  // namespace scn

#endif  // SCN_CONFIG_HPP
