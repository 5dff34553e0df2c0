#include "casent/commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "casent/errors.hpp"
#include "casent/thermo.hpp"
#include "casent/verify.hpp"
#include "json.hpp"
#include "parallel.hpp"

namespace casent {

namespace {

using ordered_json = nlohmann::ordered_json;

// The phonon law is established above a few kelvin; below that only a
// residual term is physical, so rows are annotated rather than refused.
constexpr double kBgValidMinK = 4.0;

std::string config_header(const RunConfig& cfg, const std::string& command) {
  std::ostringstream os;
  os << "# casent " << command << "\n";
  for (const auto& [k, v] : resolved_entries(cfg)) os << "# " << k << " = " << v << "\n";
  return os.str();
}

ordered_json config_json(const RunConfig& cfg) {
  ordered_json j;
  for (const auto& [k, v] : resolved_entries(cfg)) j[k] = v;
  return j;
}

std::string nu_label(const RunConfig& cfg, double t_kelvin) {
  if (cfg.relaxation == RelaxationKind::constant) return "constant";
  if (t_kelvin >= kBgValidMinK) return "bg_valid";
  return cfg.relaxation == RelaxationKind::bloch_gruneisen_residual
             ? "residual_dominated"
             : "bg_extrapolated";
}

void write_output(const RunConfig& cfg, const std::string& rendered, std::ostream& out,
                  std::ostream& diag) {
  if (cfg.out_path.empty()) {
    out << rendered;
    return;
  }
  std::ofstream f(cfg.out_path, std::ios::binary | std::ios::trunc);
  if (!f) throw std::invalid_argument("cannot open output file '" + cfg.out_path + "'");
  f << rendered;
  diag << "wrote " << cfg.out_path << "\n";
}

}  // namespace

int cmd_nu(const RunConfig& cfg, std::ostream& out, std::ostream& diag) {
  validate_config(cfg);
  const RelaxationModel model = build_relaxation(cfg);
  const std::vector<double> ts = sweep_temperatures(cfg);

  std::string rendered;
  if (cfg.format == "csv") {
    std::ostringstream os;
    os << config_header(cfg, "nu") << "T_K,nu_mev,regime_label\n";
    for (double t : ts)
      os << format_double(t) << "," << format_double(nu_at(model, t).mev) << ","
         << nu_label(cfg, t) << "\n";
    rendered = os.str();
  } else {
    ordered_json j;
    j["config"] = config_json(cfg);
    j["rows"] = ordered_json::array();
    for (double t : ts)
      j["rows"].push_back({{"t_k", t},
                           {"nu_mev", nu_at(model, t).mev},
                           {"regime_label", nu_label(cfg, t)}});
    rendered = j.dump(2) + "\n";
  }
  write_output(cfg, rendered, out, diag);
  return exit_ok;
}

int cmd_regimes(const RunConfig& cfg, std::ostream& out, std::ostream& diag) {
  validate_config(cfg);
  const RelaxationModel model = build_relaxation(cfg);
  const std::vector<double> ts = sweep_temperatures(cfg);

  std::vector<RegimeReport> reports;
  reports.reserve(ts.size());
  for (double t : ts) reports.push_back(regime_report(model, t, cfg.m_max, cfg.strong_ratio));

  std::string rendered;
  if (cfg.format == "csv") {
    std::ostringstream os;
    os << config_header(cfg, "regimes");
    for (double nu0 : cfg.crossover_nu0_mev)
      os << "# crossover: nu0_mev=" << format_double(nu0) << " n_freq=" << cfg.n_freq
         << " strong_ratio=" << format_double(cfg.strong_ratio)
         << " T_K=" << format_double(crossover_temperature(nu0, cfg.n_freq, cfg.strong_ratio))
         << "\n";
    os << "T_K,m,zeta_m_mev,nu_mev,relation\n";
    for (const auto& rep : reports)
      for (const auto& e : rep.entries)
        os << format_double(rep.t_kelvin) << "," << e.m << ","
           << format_double(e.zeta_m_mev) << "," << format_double(rep.nu_mev) << ","
           << to_string(e.relation) << "\n";
    rendered = os.str();
  } else {
    ordered_json j;
    j["config"] = config_json(cfg);
    j["crossovers"] = ordered_json::array();
    for (double nu0 : cfg.crossover_nu0_mev)
      j["crossovers"].push_back(
          {{"nu0_mev", nu0},
           {"n_freq", cfg.n_freq},
           {"strong_ratio", cfg.strong_ratio},
           {"t_k", crossover_temperature(nu0, cfg.n_freq, cfg.strong_ratio)}});
    j["reports"] = ordered_json::array();
    for (const auto& rep : reports) {
      ordered_json entries = ordered_json::array();
      for (const auto& e : rep.entries)
        entries.push_back(
            {{"m", e.m}, {"zeta_m_mev", e.zeta_m_mev}, {"relation", to_string(e.relation)}});
      j["reports"].push_back(
          {{"t_k", rep.t_kelvin}, {"nu_mev", rep.nu_mev}, {"entries", entries}});
    }
    rendered = j.dump(2) + "\n";
  }
  write_output(cfg, rendered, out, diag);
  return exit_ok;
}

int cmd_free_energy(const RunConfig& cfg, std::ostream& out, std::ostream& diag) {
  validate_config(cfg);
  const PlateSystem sys = build_system(cfg);
  const FreeEnergyCurve curve = free_energy_curve(sys, sweep_temperatures(cfg), cfg.threads);

  std::string rendered;
  if (cfg.format == "csv") {
    std::ostringstream os;
    os << config_header(cfg, "free-energy") << "T_K,F_J_per_m2,terms_used,est_error\n";
    for (const auto& p : curve.points)
      os << format_double(p.t_kelvin) << "," << format_double(p.f_j_per_m2) << ","
         << p.terms_used << "," << format_double(p.est_error) << "\n";
    rendered = os.str();
  } else {
    ordered_json j;
    j["config"] = config_json(cfg);
    j["rows"] = ordered_json::array();
    for (const auto& p : curve.points)
      j["rows"].push_back({{"t_k", p.t_kelvin},
                           {"f_j_per_m2", p.f_j_per_m2},
                           {"terms_used", p.terms_used},
                           {"est_error", p.est_error}});
    rendered = j.dump(2) + "\n";
  }
  write_output(cfg, rendered, out, diag);
  return exit_ok;
}

int cmd_entropy(const RunConfig& cfg, std::ostream& out, std::ostream& diag) {
  RunConfig c = cfg;
  // entropy needs a grid that reaches the low-temperature crossover; the
  // generic 0.01..800 K default would miss it
  if (!c.keys_seen.count("sweep.t_min_k") && c.t_list_k.empty()) c.t_min_k = 1e-7;
  if (!c.keys_seen.count("sweep.t_max_k") && c.t_list_k.empty()) c.t_max_k = 0.3;
  if (!c.keys_seen.count("sweep.points") && c.t_list_k.empty()) c.points = 14;
  validate_config(c);
  const PlateSystem sys = build_system(c);

  std::vector<double> ts = sweep_temperatures(c);
  std::sort(ts.begin(), ts.end(), std::greater<>());  // decreasing toward 0
  EntropyCurve curve;
  curve.system = sys;
  curve.points = entropy_grid(sys, ts, c.threads);
  const std::vector<EntropyPoint>& pts = curve.points;
  const NernstVerdict verdict = classify_from_points(pts);

  ordered_json vj;
  vj["classification"] = to_string(verdict.classification);
  vj["s_limit_estimate"] = verdict.s_limit_estimate;
  vj["s_limit_error"] = verdict.s_limit_error;
  vj["evidence_window"] = {{"t_lo_k", verdict.evidence_t_lo_k},
                           {"t_hi_k", verdict.evidence_t_hi_k}};

  if (c.format == "csv") {
    std::ostringstream os;
    os << config_header(c, "entropy") << "T_K,S_J_per_m2K,step_K,est_error\n";
    for (const auto& p : pts)
      os << format_double(p.t_kelvin) << "," << format_double(p.s_j_per_m2_k) << ","
         << format_double(p.step_used_k) << "," << format_double(p.est_error) << "\n";
    write_output(c, os.str(), out, diag);
    ordered_json full;
    full["config"] = config_json(c);
    full["verdict"] = vj;
    if (c.out_path.empty()) {
      out << full.dump(2) << "\n";
    } else {
      const std::string vpath = c.out_path + ".verdict.json";
      std::ofstream f(vpath, std::ios::binary | std::ios::trunc);
      if (!f) throw std::invalid_argument("cannot open output file '" + vpath + "'");
      f << full.dump(2) << "\n";
      diag << "wrote " << vpath << "\n";
    }
  } else {
    ordered_json j;
    j["config"] = config_json(c);
    j["points"] = ordered_json::array();
    for (const auto& p : pts)
      j["points"].push_back({{"t_k", p.t_kelvin},
                             {"s_j_per_m2_k", p.s_j_per_m2_k},
                             {"step_k", p.step_used_k},
                             {"est_error", p.est_error}});
    j["verdict"] = vj;
    write_output(c, j.dump(2) + "\n", out, diag);
  }
  return exit_ok;
}

int cmd_fit(const RunConfig& cfg, std::ostream& out, std::ostream& diag) {
  validate_config(cfg);
  // The asymptotic form is defined for the constant-residual Drude regime;
  // the configured nu0 is used as that constant.
  PlateSystem sys;
  sys.separation_m = cfg.separation_m;
  sys.permittivity =
      PermittivityModel::drude(cfg.omega_p_mev, RelaxationModel::constant(cfg.nu0_mev));
  sys.numeric = cfg.numeric;
  if (cfg.model != PermittivityKind::drude || cfg.relaxation != RelaxationKind::constant)
    diag << "fit uses drude + constant nu0 = " << format_double(cfg.nu0_mev) << " meV\n";

  const std::vector<double> ts = cfg.t_list_k.empty()
                                     ? default_fit_temperatures(cfg.nu0_mev, cfg.fit_points)
                                     : cfg.t_list_k;
  const AsymptoticFit fit = fit_asymptotic_coefficients(sys, ts, cfg.strong_ratio);

  ordered_json j;
  j["config"] = config_json(cfg);
  j["c1_j_per_m2_k2"] = fit.c1;
  j["c2_per_sqrt_k"] = fit.c2;
  j["c1_err"] = fit.c1_err;
  j["c2_err"] = fit.c2_err;
  j["fit_window"] = {{"t_lo_k", fit.t_lo_k}, {"t_hi_k", fit.t_hi_k}};
  j["rms_residual"] = fit.rms_residual;
  j["separation_m"] = fit.separation_m;
  j["nu0_mev"] = fit.nu0_mev;
  write_output(cfg, j.dump(2) + "\n", out, diag);
  return exit_ok;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& diag) {
  VerifyOptions opt;
  opt.slow = cfg.slow;
  opt.threads = cfg.threads;
  const std::vector<CheckResult> results = run_verify(opt);
  write_output(cfg, render_verify_report(results), out, diag);
  for (const auto& r : results)
    diag << r.name << ": " << (r.passed ? "pass" : "FAIL") << " in " << r.elapsed_s
         << " s (budget " << r.budget_s << " s)\n";
  return all_passed(results) ? exit_ok : exit_verify_failed;
}

int run_command(const std::string& name, const RunConfig& cfg, std::ostream& diag) {
  try {
    std::ostream& out = std::cout;
    if (name == "nu") return cmd_nu(cfg, out, diag);
    if (name == "regimes") return cmd_regimes(cfg, out, diag);
    if (name == "free-energy") return cmd_free_energy(cfg, out, diag);
    if (name == "entropy") return cmd_entropy(cfg, out, diag);
    if (name == "fit") return cmd_fit(cfg, out, diag);
    if (name == "verify") return cmd_verify(cfg, out, diag);
    diag << "unknown command '" << name << "'\n";
    return exit_usage;
  } catch (const ConvergenceError& e) {
    diag << "numerical error: " << e.what() << "\n";
    return exit_numeric;
  } catch (const CancellationError& e) {
    diag << "numerical error: " << e.what() << "\n";
    return exit_numeric;
  } catch (const FitError& e) {
    diag << "numerical error: " << e.what() << "\n";
    return exit_numeric;
  } catch (const std::invalid_argument& e) {
    diag << "config error: " << e.what() << "\n";
    return exit_usage;
  }
}

}  // namespace casent
