#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "casent/commands.hpp"

namespace {

struct CliArgs {
  std::string config_path;
  std::string output_path;
  std::string format;
  std::vector<std::string> overrides;  // key=value
  int threads = 0;
  bool slow = false;
};

void add_common(CLI::App* cmd, CliArgs& args) {
  cmd->add_option("--config", args.config_path, "Configuration file (key = value lines)");
  cmd->add_option("--output", args.output_path, "Output file (default: stdout)");
  cmd->add_option("--format", args.format, "Output format: csv|json");
  cmd->add_option("--set", args.overrides, "Override a single config key, e.g. --set material.model=plasma");
  cmd->add_option("--threads", args.threads, "Worker threads for sweeps");
  cmd->add_flag("--slow", args.slow, "Enable the physical-nu0 deep-low-T checks");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Casimir free energy and entropy between parallel metal plates"};
  app.require_subcommand(1);

  CliArgs args;
  const std::vector<std::string> names = {"nu", "regimes", "free-energy", "entropy",
                                          "fit", "verify"};
  const std::vector<std::string> descriptions = {
      "Relaxation frequency nu(T) over a temperature sweep",
      "Matsubara-frequency vs relaxation regime tables and crossover temperatures",
      "Free energy F(a,T) per unit area over a temperature sweep",
      "Entropy S(T) curve and the zero-temperature verdict",
      "Low-temperature asymptotic coefficients C1, C2",
      "Golden verification suite over built-in Au defaults"};
  for (std::size_t i = 0; i < names.size(); ++i)
    add_common(app.add_subcommand(names[i], descriptions[i]), args);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);  // prints the message / help text
    return e.get_exit_code() == 0 ? 0 : casent::exit_usage;
  }

  try {
    casent::RunConfig cfg;
    if (!args.config_path.empty()) cfg = casent::parse_config_file(args.config_path);
    for (const auto& kv : args.overrides) {
      const auto eq = kv.find('=');
      if (eq == std::string::npos)
        throw std::invalid_argument("--set expects key=value, got '" + kv + "'");
      casent::apply_config_entry(cfg, kv.substr(0, eq), kv.substr(eq + 1));
    }
    if (!args.output_path.empty()) cfg.out_path = args.output_path;
    if (!args.format.empty()) {
      if (args.format != "csv" && args.format != "json")
        throw std::invalid_argument("--format must be csv or json");
      cfg.format = args.format;
    }
    if (args.threads > 0) cfg.threads = args.threads;
    if (args.slow) cfg.slow = true;

    return casent::run_command(app.get_subcommands().front()->get_name(), cfg, std::cerr);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return casent::exit_usage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return casent::exit_numeric;
  }
}
