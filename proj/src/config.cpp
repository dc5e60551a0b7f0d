#include "scn/config.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <string>

#include "scn/errors.hpp"

namespace scn {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

double parse_double(const std::string& value, int line_no) {
  std::size_t consumed = 0;
  double out = 0.0;
  try {
    out = std::stod(value, &consumed);
  } catch (const std::exception&) {
    throw UsageError("config line " + std::to_string(line_no) +
                     ": expected a number, got '" + value + "'");
  }
  if (consumed != value.size()) {
    throw UsageError("config line " + std::to_string(line_no) +
                     ": trailing characters after number in '" + value + "'");
  }
  return out;
}

// Shortest decimal digit string that round-trips the double exactly.
std::string format_exact(double v) {
  char buf[64];
  for (int precision = 15; precision <= 17; ++precision) {
    std::snprintf(buf, sizeof(buf), "%.*g", precision, v);
    if (std::stod(buf) == v) break;
  }
  return buf;
}

}  // namespace

ModelConfig parse_config(const std::string& text) {
  ModelConfig cfg;
  std::set<std::string> seen;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string stripped = trim(line);
    if (stripped.empty() || stripped[0] == '#') continue;
    const std::size_t eq = stripped.find('=');
    if (eq == std::string::npos) {
      throw UsageError("config line " + std::to_string(line_no) +
                       ": expected key=value, got '" + stripped + "'");
    }
    const std::string key = trim(stripped.substr(0, eq));
    const std::string value = trim(stripped.substr(eq + 1));
    if (!seen.insert(key).second) {
      throw UsageError("config line " + std::to_string(line_no) +
                       ": duplicate key '" + key + "'");
    }
    if (key == "model") {
      if (value != "3gpp_case1" && value != "single_slope") {
        throw UsageError("config line " + std::to_string(line_no) +
                         ": model must be 3gpp_case1 or single_slope");
      }
      cfg.model = value;
    } else if (key == "d1_km") {
      cfg.d1_km = parse_double(value, line_no);
    } else if (key == "alpha_los") {
      cfg.alpha_los = parse_double(value, line_no);
    } else if (key == "alpha_nlos") {
      cfg.alpha_nlos = parse_double(value, line_no);
    } else if (key == "a_los_db") {
      cfg.a_los_db = parse_double(value, line_no);
    } else if (key == "a_nlos_db") {
      cfg.a_nlos_db = parse_double(value, line_no);
    } else if (key == "tx_power_dbm") {
      cfg.tx_power_dbm = parse_double(value, line_no);
    } else if (key == "noise_dbm") {
      cfg.noise_dbm = parse_double(value, line_no);
    } else {
      throw UsageError("config line " + std::to_string(line_no) +
                       ": unknown key '" + key + "'");
    }
  }
  return cfg;
}

ModelConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open config file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

std::string serialize_config(const ModelConfig& cfg) {
  std::ostringstream out;
  out << "model=" << cfg.model << "\n"
      << "d1_km=" << format_exact(cfg.d1_km) << "\n"
      << "alpha_los=" << format_exact(cfg.alpha_los) << "\n"
      << "alpha_nlos=" << format_exact(cfg.alpha_nlos) << "\n"
      << "a_los_db=" << format_exact(cfg.a_los_db) << "\n"
      << "a_nlos_db=" << format_exact(cfg.a_nlos_db) << "\n"
      << "tx_power_dbm=" << format_exact(cfg.tx_power_dbm) << "\n"
      << "noise_dbm=" << format_exact(cfg.noise_dbm) << "\n";
  return out.str();
}

NetworkEnvironment to_environment(const ModelConfig& cfg) {
  const double tx = dbm_to_mw(cfg.tx_power_dbm);
  const double noise = dbm_to_mw(cfg.noise_dbm);
  // 1 m reference -> 1 km reference.
  const double a_nlos = std::pow(10.0, (cfg.a_nlos_db - 30.0 * cfg.alpha_nlos) / 10.0);
  if (cfg.model == "single_slope") {
    return preset_single_slope(cfg.alpha_nlos, a_nlos, tx, noise);
  }
  if (!(cfg.d1_km > 0.0)) throw ParameterError("d1_km must be positive");
  const double a_los = std::pow(10.0, (cfg.a_los_db - 30.0 * cfg.alpha_los) / 10.0);

  PathLossSegment near{0.0, cfg.d1_km, a_los, cfg.alpha_los, a_nlos,
                       cfg.alpha_nlos, Linear3gppLos{cfg.d1_km}};
  PathLossSegment far{cfg.d1_km, std::numeric_limits<double>::infinity(),
                      a_los, cfg.alpha_los, a_nlos, cfg.alpha_nlos,
                      ConstantLos{0.0}};
  NetworkEnvironment env;
  env.tx_power_mw = tx;
  env.noise_mw = noise;
  env.model.segments = {near, far};
  validate(env.model);
  return env;
}

}  // namespace scn
