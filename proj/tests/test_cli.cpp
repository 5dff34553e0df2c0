#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "casent/commands.hpp"
#include "casent/errors.hpp"
#include "doctest.h"
#include "json.hpp"

using namespace casent;
namespace fs = std::filesystem;

namespace {

fs::path temp_file(const std::string& name) {
  return fs::temp_directory_path() / ("casent_test_" + name);
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Runs the installed binary when available (CASENT_CLI set by ctest).
struct CliRun {
  int exit_code = -1;
  std::string out;
};

CliRun run_cli(const std::string& args, const std::string& tag) {
  const char* cli = std::getenv("CASENT_CLI");
  REQUIRE(cli != nullptr);
  const fs::path out = temp_file("stdout_" + tag);
  const std::string cmd =
      std::string(cli) + " " + args + " > " + out.string() + " 2> /dev/null";
  const int rc = std::system(cmd.c_str());
  CliRun r;
  r.exit_code = WEXITSTATUS(rc);
  r.out = slurp(out);
  fs::remove(out);
  return r;
}

}  // namespace

TEST_CASE("config parsing round trip") {
  const fs::path p = temp_file("cfg");
  {
    std::ofstream f(p);
    f << "# comment line\n"
      << "material.model = plasma\n"
      << "material.omega_p_mev = 8000   # inline comment\n"
      << "geometry.separation_m = 2e-6\n"
      << "sweep.t_list_k = 1, 10, 100\n"
      << "numerics.threads = 2\n";
  }
  const RunConfig cfg = parse_config_file(p.string());
  CHECK(cfg.model == PermittivityKind::plasma);
  CHECK(cfg.omega_p_mev == 8000.0);
  CHECK(cfg.separation_m == 2e-6);
  REQUIRE(cfg.t_list_k.size() == 3);
  CHECK(cfg.t_list_k[1] == 10.0);
  CHECK(cfg.threads == 2);
  fs::remove(p);

  const auto entries = resolved_entries(cfg);
  CHECK(entries.at("material.model") == "plasma");
  CHECK(entries.at("sweep.t_list_k") == "1,10,100");
  CHECK(entries.count("numerics.sum_rel_tol") == 1);  // defaults are embedded too
}

TEST_CASE("config rejection paths") {
  RunConfig cfg;
  CHECK_THROWS_AS(apply_config_entry(cfg, "material.bogus", "1"), std::invalid_argument);
  CHECK_THROWS_AS(apply_config_entry(cfg, "material.omega_p_mev", "abc"),
                  std::invalid_argument);
  CHECK_THROWS_AS(apply_config_entry(cfg, "sweep.points", "2.5"), std::invalid_argument);

  cfg = RunConfig{};
  cfg.omega_p_mev = 10.0;  // below the validated range
  CHECK_THROWS_AS(validate_config(cfg), std::invalid_argument);
  cfg = RunConfig{};
  cfg.separation_m = 1.0;
  CHECK_THROWS_AS(validate_config(cfg), std::invalid_argument);
  cfg = RunConfig{};
  cfg.t_min_k = 1e-12;
  CHECK_THROWS_AS(validate_config(cfg), std::invalid_argument);
}

TEST_CASE("sweep generation") {
  RunConfig cfg;
  cfg.t_min_k = 1.0;
  cfg.t_max_k = 100.0;
  cfg.points = 3;
  cfg.log_scale = true;
  auto ts = sweep_temperatures(cfg);
  REQUIRE(ts.size() == 3);
  CHECK(ts[1] == doctest::Approx(10.0));
  cfg.log_scale = false;
  ts = sweep_temperatures(cfg);
  CHECK(ts[1] == doctest::Approx(50.5));
  cfg.t_list_k = {5.0, 7.0};
  CHECK(sweep_temperatures(cfg) == std::vector<double>{5.0, 7.0});
}

TEST_CASE("nu command emits calibrated values with regime labels") {
  RunConfig cfg;
  cfg.t_list_k = {1.0, 300.0};
  std::ostringstream out, diag;
  CHECK(cmd_nu(cfg, out, diag) == exit_ok);
  const std::string s = out.str();
  CHECK(s.find("T_K,nu_mev,regime_label") != std::string::npos);
  CHECK(s.find("residual_dominated") != std::string::npos);  // 1 K row
  CHECK(s.find("bg_valid") != std::string::npos);            // 300 K row
  CHECK(s.find("# material.omega_p_mev = 9000") != std::string::npos);
}

TEST_CASE("free-energy command: exact column contract") {
  RunConfig cfg;
  cfg.model = PermittivityKind::plasma;
  cfg.t_list_k = {300.0};
  std::ostringstream out, diag;
  CHECK(cmd_free_energy(cfg, out, diag) == exit_ok);
  const std::string s = out.str();
  CHECK(s.find("T_K,F_J_per_m2,terms_used,est_error\n") != std::string::npos);
  // one data row, negative free energy
  const auto header_end = s.find("terms_used,est_error\n");
  const std::string row = s.substr(header_end + std::string("terms_used,est_error\n").size());
  CHECK(row.find("300,-") == 0);
}

TEST_CASE("regimes command appends crossover temperatures") {
  RunConfig cfg;
  cfg.t_list_k = {300.0};
  cfg.m_max = 2;
  std::ostringstream out, diag;
  CHECK(cmd_regimes(cfg, out, diag) == exit_ok);
  const std::string s = out.str();
  CHECK(s.find("# crossover: nu0_mev=0.0345") != std::string::npos);
  CHECK(s.find("greater") != std::string::npos);
  CHECK(s.find("T_K,m,zeta_m_mev,nu_mev,relation") != std::string::npos);
}

TEST_CASE("fit command emits the coefficient record as JSON") {
  RunConfig cfg;
  cfg.relaxation = RelaxationKind::constant;
  cfg.nu0_mev = 3.45;
  std::ostringstream out, diag;
  CHECK(cmd_fit(cfg, out, diag) == exit_ok);
  const auto j = nlohmann::json::parse(out.str());
  CHECK(j["c1_j_per_m2_k2"].get<double>() > 0.0);
  CHECK(j["c2_per_sqrt_k"].get<double>() > 0.0);
  CHECK(j["rms_residual"].get<double>() <= 1e-2);
  CHECK(j["nu0_mev"].get<double>() == 3.45);
  CHECK(j["separation_m"].get<double>() == 1e-6);
  CHECK(j.contains("config"));
}

TEST_CASE("entropy command: curve, verdict, and json format") {
  RunConfig cfg;
  cfg.model = PermittivityKind::plasma;
  cfg.format = "json";
  cfg.t_list_k = {0.5, 0.25, 0.12, 0.06, 0.03, 0.015, 0.008, 0.004};
  std::ostringstream out, diag;
  CHECK(cmd_entropy(cfg, out, diag) == exit_ok);
  const auto j = nlohmann::json::parse(out.str());
  REQUIRE(j["points"].size() == 8);
  CHECK(j["verdict"]["classification"].get<std::string>().find("satisfied") == 0);
  CHECK(j["verdict"].contains("evidence_window"));
}

TEST_CASE("cli binary: byte-identical repeated runs and exit codes") {
  const std::string fit_args =
      "fit --set material.relaxation=constant --set material.nu0_mev=3.45";
  const CliRun a = run_cli(fit_args, "a");
  const CliRun b = run_cli(fit_args, "b");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(!a.out.empty());

  // usage error: unknown option
  CHECK(run_cli("fit --no-such-flag", "c").exit_code == 1);
  // config error: out-of-range separation
  CHECK(run_cli("nu --set geometry.separation_m=5", "d").exit_code == 1);
  // numerical failure: truncate mode cannot converge within the term budget
  const CliRun e = run_cli(
      "free-energy --set numerics.tail_method=truncate "
      "--set numerics.max_matsubara_terms=1000 --set sweep.t_list_k=0.05",
      "e");
  CHECK(e.exit_code == 2);
  CHECK(e.out.empty());  // failed runs write nothing
}

TEST_CASE("cli binary: verify reports are byte-identical across runs and threads") {
  const CliRun serial = run_cli("verify --threads 1", "v1");
  const CliRun parallel = run_cli("verify --threads 4", "v4");
  CHECK(serial.exit_code == 0);
  CHECK(parallel.exit_code == 0);
  CHECK(serial.out == parallel.out);
  CHECK(serial.out.find("[FAIL]") == std::string::npos);
  CHECK(serial.out.find("[SKIP] c07") != std::string::npos);  // slow gate off
}

TEST_CASE("cli binary: output files are complete and config-stamped") {
  const fs::path out_csv = temp_file("entropy.csv");
  const CliRun r = run_cli(
      "entropy --set material.model=plasma "
      "--set sweep.t_list_k=0.5,0.25,0.12,0.06,0.03,0.015,0.008,0.004 --output " +
          out_csv.string(),
      "f");
  CHECK(r.exit_code == 0);
  const std::string csv = slurp(out_csv);
  CHECK(csv.find("T_K,S_J_per_m2K,step_K,est_error") != std::string::npos);
  CHECK(csv.find("# material.model = plasma") != std::string::npos);
  const fs::path verdict = out_csv.string() + ".verdict.json";
  REQUIRE(fs::exists(verdict));
  const auto j = nlohmann::json::parse(slurp(verdict));
  CHECK(j["verdict"].contains("classification"));
  fs::remove(out_csv);
  fs::remove(verdict);
}
