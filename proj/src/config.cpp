#include "casent/config.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace casent {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

double parse_number(const std::string& key, const std::string& value) {
  std::size_t pos = 0;
  double v = 0;
  try {
    v = std::stod(value, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument("config: bad numeric value for " + key + ": '" + value + "'");
  }
  if (pos != value.size())
    throw std::invalid_argument("config: bad numeric value for " + key + ": '" + value + "'");
  return v;
}

long parse_integer(const std::string& key, const std::string& value) {
  const double v = parse_number(key, value);
  if (v != std::floor(v))
    throw std::invalid_argument("config: " + key + " must be an integer");
  return static_cast<long>(v);
}

std::vector<double> parse_list(const std::string& key, const std::string& value) {
  std::vector<double> out;
  std::stringstream ss(value);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(parse_number(key, item));
  }
  if (out.empty())
    throw std::invalid_argument("config: empty list for " + key);
  return out;
}

std::string join(const std::vector<double>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += format_double(v[i]);
  }
  return s;
}

}  // namespace

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

void apply_config_entry(RunConfig& cfg, const std::string& key, const std::string& value) {
  cfg.keys_seen.insert(key);
  if (key == "material.model") {
    if (value == "drude") cfg.model = PermittivityKind::drude;
    else if (value == "plasma") cfg.model = PermittivityKind::plasma;
    else throw std::invalid_argument("config: material.model must be drude|plasma");
  } else if (key == "material.omega_p_mev") {
    cfg.omega_p_mev = parse_number(key, value);
  } else if (key == "material.relaxation") {
    if (value == "constant") cfg.relaxation = RelaxationKind::constant;
    else if (value == "bloch_gruneisen") cfg.relaxation = RelaxationKind::bloch_gruneisen;
    else if (value == "bloch_gruneisen_residual")
      cfg.relaxation = RelaxationKind::bloch_gruneisen_residual;
    else
      throw std::invalid_argument(
          "config: material.relaxation must be "
          "constant|bloch_gruneisen|bloch_gruneisen_residual");
  } else if (key == "material.nu0_mev") {
    cfg.nu0_mev = parse_number(key, value);
  } else if (key == "material.debye_t_k") {
    cfg.debye_t_k = parse_number(key, value);
  } else if (key == "material.calib_t_k") {
    cfg.calib_t_k = parse_number(key, value);
  } else if (key == "material.calib_nu_mev") {
    cfg.calib_nu_mev = parse_number(key, value);
  } else if (key == "geometry.separation_m") {
    cfg.separation_m = parse_number(key, value);
  } else if (key == "numerics.quad_rel_tol") {
    cfg.numeric.quad_rel_tol = parse_number(key, value);
  } else if (key == "numerics.sum_rel_tol") {
    cfg.numeric.sum_rel_tol = parse_number(key, value);
  } else if (key == "numerics.max_matsubara_terms") {
    cfg.numeric.max_matsubara_terms = parse_integer(key, value);
  } else if (key == "numerics.tail_method") {
    if (value == "euler_maclaurin") cfg.numeric.tail_method = TailMethod::euler_maclaurin;
    else if (value == "truncate") cfg.numeric.tail_method = TailMethod::truncate;
    else throw std::invalid_argument("config: numerics.tail_method must be euler_maclaurin|truncate");
  } else if (key == "numerics.strong_ratio") {
    cfg.strong_ratio = parse_number(key, value);
  } else if (key == "numerics.threads") {
    cfg.threads = static_cast<int>(parse_integer(key, value));
  } else if (key == "sweep.t_min_k") {
    cfg.t_min_k = parse_number(key, value);
  } else if (key == "sweep.t_max_k") {
    cfg.t_max_k = parse_number(key, value);
  } else if (key == "sweep.points") {
    cfg.points = static_cast<int>(parse_integer(key, value));
  } else if (key == "sweep.scale") {
    if (value == "log") cfg.log_scale = true;
    else if (value == "linear") cfg.log_scale = false;
    else throw std::invalid_argument("config: sweep.scale must be log|linear");
  } else if (key == "sweep.t_list_k") {
    cfg.t_list_k = parse_list(key, value);
  } else if (key == "regimes.m_max") {
    cfg.m_max = static_cast<int>(parse_integer(key, value));
  } else if (key == "regimes.n_freq") {
    cfg.n_freq = static_cast<int>(parse_integer(key, value));
  } else if (key == "regimes.crossover_nu0_mev") {
    cfg.crossover_nu0_mev = parse_list(key, value);
  } else if (key == "fit.nu0_list_mev") {
    cfg.fit_nu0_list_mev = parse_list(key, value);
  } else if (key == "fit.points") {
    cfg.fit_points = static_cast<int>(parse_integer(key, value));
  } else if (key == "output.format") {
    if (value != "csv" && value != "json")
      throw std::invalid_argument("config: output.format must be csv|json");
    cfg.format = value;
  } else if (key == "output.path") {
    cfg.out_path = value;
  } else {
    throw std::invalid_argument("config: unknown key '" + key + "'");
  }
}

RunConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("config: cannot open '" + path + "'");
  RunConfig cfg;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("config: line " + std::to_string(lineno) +
                                  " is not 'key = value'");
    apply_config_entry(cfg, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
  return cfg;
}

void validate_config(const RunConfig& cfg) {
  if (cfg.omega_p_mev < 1e3 || cfg.omega_p_mev > 1e5)
    throw std::invalid_argument("config: material.omega_p_mev must be in [1e3, 1e5]");
  if (cfg.separation_m < 1e-8 || cfg.separation_m > 1e-4)
    throw std::invalid_argument("config: geometry.separation_m must be in [1e-8, 1e-4]");
  if (cfg.relaxation != RelaxationKind::bloch_gruneisen && !(cfg.nu0_mev > 0))
    throw std::invalid_argument("config: material.nu0_mev must be > 0 for this variant");
  if (!(cfg.debye_t_k > 0) || !(cfg.calib_t_k > 0) || !(cfg.calib_nu_mev > 0))
    throw std::invalid_argument("config: Bloch-Gruneisen parameters must be > 0");
  cfg.numeric.validate();
  if (!(cfg.strong_ratio > 0) || cfg.strong_ratio > 0.2)
    throw std::invalid_argument("config: numerics.strong_ratio must be in (0, 0.2]");
  if (cfg.threads < 1 || cfg.threads > 256)
    throw std::invalid_argument("config: numerics.threads must be in [1, 256]");
  if (cfg.points < 1) throw std::invalid_argument("config: sweep.points must be >= 1");
  if (cfg.m_max < 1) throw std::invalid_argument("config: regimes.m_max must be >= 1");
  if (cfg.n_freq < 1) throw std::invalid_argument("config: regimes.n_freq must be >= 1");
  if (cfg.fit_points < 6) throw std::invalid_argument("config: fit.points must be >= 6");
  for (double t : sweep_temperatures(cfg))
    if (t < 1e-8 || t > 1e3)
      throw std::invalid_argument("config: sweep temperatures must be in [1e-8, 1e3] K");
  for (double nu : cfg.crossover_nu0_mev)
    if (!(nu > 0)) throw std::invalid_argument("config: crossover nu0 values must be > 0");
  for (double nu : cfg.fit_nu0_list_mev)
    if (!(nu > 0)) throw std::invalid_argument("config: fit nu0 values must be > 0");
}

std::map<std::string, std::string> resolved_entries(const RunConfig& cfg) {
  std::map<std::string, std::string> m;
  m["material.model"] = cfg.model == PermittivityKind::drude ? "drude" : "plasma";
  m["material.omega_p_mev"] = format_double(cfg.omega_p_mev);
  switch (cfg.relaxation) {
    case RelaxationKind::constant: m["material.relaxation"] = "constant"; break;
    case RelaxationKind::bloch_gruneisen: m["material.relaxation"] = "bloch_gruneisen"; break;
    case RelaxationKind::bloch_gruneisen_residual:
      m["material.relaxation"] = "bloch_gruneisen_residual";
      break;
  }
  m["material.nu0_mev"] = format_double(cfg.nu0_mev);
  m["material.debye_t_k"] = format_double(cfg.debye_t_k);
  m["material.calib_t_k"] = format_double(cfg.calib_t_k);
  m["material.calib_nu_mev"] = format_double(cfg.calib_nu_mev);
  m["geometry.separation_m"] = format_double(cfg.separation_m);
  m["numerics.quad_rel_tol"] = format_double(cfg.numeric.quad_rel_tol);
  m["numerics.sum_rel_tol"] = format_double(cfg.numeric.sum_rel_tol);
  m["numerics.max_matsubara_terms"] = std::to_string(cfg.numeric.max_matsubara_terms);
  m["numerics.tail_method"] = cfg.numeric.tail_method == TailMethod::euler_maclaurin
                                  ? "euler_maclaurin"
                                  : "truncate";
  m["numerics.strong_ratio"] = format_double(cfg.strong_ratio);
  m["numerics.threads"] = std::to_string(cfg.threads);
  if (cfg.t_list_k.empty()) {
    m["sweep.t_min_k"] = format_double(cfg.t_min_k);
    m["sweep.t_max_k"] = format_double(cfg.t_max_k);
    m["sweep.points"] = std::to_string(cfg.points);
    m["sweep.scale"] = cfg.log_scale ? "log" : "linear";
  } else {
    m["sweep.t_list_k"] = join(cfg.t_list_k);
  }
  m["regimes.m_max"] = std::to_string(cfg.m_max);
  m["regimes.n_freq"] = std::to_string(cfg.n_freq);
  m["regimes.crossover_nu0_mev"] = join(cfg.crossover_nu0_mev);
  m["fit.nu0_list_mev"] = join(cfg.fit_nu0_list_mev);
  m["fit.points"] = std::to_string(cfg.fit_points);
  m["output.format"] = cfg.format;
  return m;
}

RelaxationModel build_relaxation(const RunConfig& cfg) {
  switch (cfg.relaxation) {
    case RelaxationKind::constant:
      return RelaxationModel::constant(cfg.nu0_mev);
    case RelaxationKind::bloch_gruneisen:
      return RelaxationModel::bloch_gruneisen(cfg.debye_t_k, cfg.calib_t_k,
                                              cfg.calib_nu_mev);
    case RelaxationKind::bloch_gruneisen_residual:
    default:
      return RelaxationModel::bloch_gruneisen_residual(cfg.debye_t_k, cfg.calib_t_k,
                                                       cfg.calib_nu_mev, cfg.nu0_mev);
  }
}

PlateSystem build_system(const RunConfig& cfg) {
  PlateSystem sys;
  sys.separation_m = cfg.separation_m;
  sys.permittivity = cfg.model == PermittivityKind::drude
                         ? PermittivityModel::drude(cfg.omega_p_mev, build_relaxation(cfg))
                         : PermittivityModel::plasma(cfg.omega_p_mev);
  sys.numeric = cfg.numeric;
  return sys;
}

std::vector<double> sweep_temperatures(const RunConfig& cfg) {
  if (!cfg.t_list_k.empty()) return cfg.t_list_k;
  std::vector<double> ts(cfg.points);
  if (cfg.points == 1) {
    ts[0] = cfg.t_min_k;
    return ts;
  }
  for (int i = 0; i < cfg.points; ++i) {
    const double f = static_cast<double>(i) / (cfg.points - 1);
    ts[i] = cfg.log_scale ? cfg.t_min_k * std::pow(cfg.t_max_k / cfg.t_min_k, f)
                          : cfg.t_min_k + f * (cfg.t_max_k - cfg.t_min_k);
  }
  return ts;
}

}  // namespace casent
