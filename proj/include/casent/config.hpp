#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "casent/analysis.hpp"
#include "casent/lifshitz.hpp"

namespace casent {

/// Resolved run configuration. Parsed from a flat dotted-key file
/// (`material.omega_p_mev = 9000`); units live in the key names.
struct RunConfig {
  // material
  PermittivityKind model = PermittivityKind::drude;
  double omega_p_mev = 9000.0;
  RelaxationKind relaxation = RelaxationKind::bloch_gruneisen_residual;
  double nu0_mev = 34.5e-3;
  double debye_t_k = 165.0;
  double calib_t_k = 300.0;
  double calib_nu_mev = 34.5;

  // geometry
  double separation_m = 1e-6;

  // numerics
  NumericControls numeric;
  double strong_ratio = 0.1;
  int threads = 1;

  // sweep (nu / regimes / free-energy default); entropy has its own default
  double t_min_k = 0.01;
  double t_max_k = 800.0;
  int points = 25;
  bool log_scale = true;
  std::vector<double> t_list_k;  // explicit grid; overrides the range

  // command-specific
  int m_max = 10;                                        // regimes
  int n_freq = 10;                                       // crossover index
  std::vector<double> crossover_nu0_mev = {34.5e-3, 34.5e-6};
  std::vector<double> fit_nu0_list_mev = {3.45, 0.345};  // fit / scaling
  int fit_points = 8;

  // output
  std::string format = "csv";  // csv | json
  std::string out_path;        // empty: stdout

  bool slow = false;

  std::set<std::string> keys_seen;  // which keys the user set explicitly
};

/// Parse `key = value` lines; '#' starts a comment. Unknown keys and
/// malformed values raise std::invalid_argument.
RunConfig parse_config_file(const std::string& path);
void apply_config_entry(RunConfig& cfg, const std::string& key, const std::string& value);

/// Range validation (omega_p in [1e3, 1e5] meV, separation in [1e-8, 1e-4] m,
/// sweep temperatures in [1e-8, 1e3] K, ...). Throws std::invalid_argument.
void validate_config(const RunConfig& cfg);

/// Full resolved configuration, defaults included, as sorted key/value text;
/// embedded verbatim in every output file.
std::map<std::string, std::string> resolved_entries(const RunConfig& cfg);

RelaxationModel build_relaxation(const RunConfig& cfg);
PlateSystem build_system(const RunConfig& cfg);
std::vector<double> sweep_temperatures(const RunConfig& cfg);

std::string format_double(double v);  // fixed %.12g, used by all emitters

}  // namespace casent
