// Command-line front end: time series, coupling sweeps, bundled figure
// presets, and a hidden dense-oracle mode for debugging.

#include <algorithm>
#include <complex>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "lmgsim/oracle.hpp"
#include "lmgsim/run.hpp"

namespace {

std::string trim(const std::string& text) {
  const auto begin = text.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = text.find_last_not_of(" \t\r");
  return text.substr(begin, end - begin + 1);
}

// Flat key=value config file; keys are named exactly like the long flags,
// '#' starts a comment.
std::vector<std::pair<std::string, std::string>> load_config_file(
    const std::string& path) {
  std::ifstream file(path);
  if (!file) {
    throw lmg::invalid_parameter("cannot read config file " + path);
  }
  std::vector<std::pair<std::string, std::string>> entries;
  std::string line;
  int line_number = 0;
  while (std::getline(file, line)) {
    ++line_number;
    const std::string content = trim(line.substr(0, line.find('#')));
    if (content.empty()) continue;
    const auto eq = content.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw lmg::invalid_parameter("config file " + path + " line " +
                                   std::to_string(line_number) +
                                   " is not key=value");
    }
    entries.emplace_back(trim(content.substr(0, eq)),
                         trim(content.substr(eq + 1)));
  }
  return entries;
}

// Pulls --config out of the raw arguments and appends the file's entries as
// --key=value tokens for every key the command line did not set, so flags
// always take precedence over the file.
std::vector<std::string> merge_config_file(std::vector<std::string> args) {
  std::string config_path;
  for (size_t i = 0; i < args.size();) {
    if (args[i] == "--config" && i + 1 < args.size()) {
      config_path = args[i + 1];
      args.erase(args.begin() + i, args.begin() + i + 2);
    } else if (args[i].rfind("--config=", 0) == 0) {
      config_path = args[i].substr(9);
      args.erase(args.begin() + i);
    } else {
      ++i;
    }
  }
  if (config_path.empty()) return args;

  for (const auto& [key, value] : load_config_file(config_path)) {
    const std::string flag = "--" + key;
    const bool given =
        std::any_of(args.begin(), args.end(), [&flag](const std::string& arg) {
          return arg == flag || arg.rfind(flag + "=", 0) == 0;
        });
    if (!given) args.push_back(flag + "=" + value);
  }
  return args;
}

void warn_if_critical(double lambda) {
  if (lambda == 1.0) {
    std::cerr << "note: lambda = 1 is the critical point of the bath; "
                 "evolving with the symmetry-broken ground state |N/2,N/2>\n";
  }
}

void add_state_options(CLI::App* cmd, lmg::ModelParams& params) {
  cmd->add_option("--spins", params.n_spins, "Number of bath spins N (even, >= 4)")
      ->capture_default_str();
  cmd->add_option("--kx", params.kx, "Initial-state coefficient kx")
      ->capture_default_str();
  cmd->add_option("--ky", params.ky, "Initial-state coefficient ky")
      ->capture_default_str();
  cmd->add_option("--kz", params.kz, "Initial-state coefficient kz")
      ->capture_default_str();
}

void add_grid_options(CLI::App* cmd, lmg::RunConfig& config) {
  cmd->add_option("--t-max", config.t_max, "End of the time window [0, t_max]")
      ->capture_default_str();
  cmd->add_option("--steps", config.steps, "Number of time points (>= 2)")
      ->capture_default_str();
}

void report(const std::vector<lmg::OutputRow>& rows,
            const lmg::RunConfig& config) {
  std::cout << "wrote " << rows.size() << " rows to "
            << config.out_path.string();
  if (config.emit_plot) {
    std::filesystem::path script = config.out_path;
    script.replace_extension(".gp");
    std::cout << " (+ " << script.string() << ")";
  }
  std::cout << "\n";
}

void print_xstate(const char* label, const lmg::XState& state) {
  std::cout << label << " a=" << state.a << " b=" << state.b
            << " c=" << state.c << " y=" << state.y << " z=("
            << state.z.real() << "," << state.z.imag() << ")\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact quantum-correlation dynamics of two central qubits coupled to "
      "an isotropic Lipkin-Meshkov-Glick spin bath"};
  app.require_subcommand(1);

  // --- simulate ---
  lmg::RunConfig sim_config;
  sim_config.mode = lmg::RunMode::Timeseries;
  auto* simulate = app.add_subcommand(
      "simulate", "Time series of all correlation measures at fixed couplings");
  std::string config_path_doc;  // consumed before parsing; kept for --help
  simulate->add_option("--config", config_path_doc,
                       "key=value file; command-line flags take precedence");
  simulate->add_option("--lambda", sim_config.params.lambda,
                       "Bath spin-spin coupling (> 0)")
      ->required();
  simulate->add_option("--lambda-prime", sim_config.params.lambda_prime,
                       "Qubit-bath coupling (>= 0)")
      ->capture_default_str();
  add_state_options(simulate, sim_config.params);
  add_grid_options(simulate, sim_config);
  simulate->add_option("--out", sim_config.out_path, "Output CSV path")
      ->required();
  simulate->add_flag("--plot", sim_config.emit_plot,
                     "Also write a gnuplot script next to the CSV");

  // --- sweep ---
  lmg::RunConfig sweep_config;
  sweep_config.mode = lmg::RunMode::Sweep;
  bool prime_equal_lambda = false;
  auto* sweep = app.add_subcommand(
      "sweep", "Cartesian grid over (lambda, t) with a lambda-prime policy");
  sweep->add_option("--config", config_path_doc,
                    "key=value file; command-line flags take precedence");
  sweep->add_option("--lambda-min", sweep_config.sweep.lambda_min,
                    "Smallest lambda (> 0)")
      ->required();
  sweep->add_option("--lambda-max", sweep_config.sweep.lambda_max,
                    "Largest lambda")
      ->required();
  sweep->add_option("--lambda-steps", sweep_config.sweep.lambda_steps,
                    "Number of lambda grid points (>= 1)")
      ->required();
  auto* prime_fixed = sweep->add_option(
      "--lambda-prime", sweep_config.params.lambda_prime,
      "Fixed qubit-bath coupling for every lambda");
  sweep
      ->add_flag("--lambda-prime-equal-lambda", prime_equal_lambda,
                 "Track lambda with lambda-prime")
      ->excludes(prime_fixed);
  add_state_options(sweep, sweep_config.params);
  add_grid_options(sweep, sweep_config);
  sweep->add_option("--out", sweep_config.out_path, "Output CSV path")
      ->required();
  sweep->add_flag("--plot", sweep_config.emit_plot,
                  "Also write a gnuplot script next to the CSV");

  // --- figure ---
  std::string figure_name;
  std::filesystem::path out_dir;
  double figure_t_max = 0.0;
  int figure_steps = 0;
  auto* figure = app.add_subcommand(
      "figure", "Run a bundled preset (fig1, fig2a..fig5d) into a directory");
  figure->add_option("name", figure_name, "Preset name")
      ->required()
      ->check(CLI::IsMember(lmg::figure_names()));
  figure->add_option("--out-dir", out_dir, "Directory for CSV + plot script")
      ->required();
  figure->add_option("--t-max", figure_t_max,
                     "Override the preset time window");
  figure->add_option("--steps", figure_steps,
                     "Override the preset number of time points");

  // --- oracle (debugging) ---
  auto* oracle_cmd = app.add_subcommand(
      "oracle", "Dense full-space and measurement-sweep cross-checks");
  oracle_cmd->group("");  // hidden

  lmg::ModelParams oracle_params;
  double oracle_t = 1.0;
  auto* oracle_evolve = oracle_cmd->add_subcommand(
      "evolve", "Compare block closed form against dense evolution");
  oracle_evolve->add_option("--lambda", oracle_params.lambda)->required();
  oracle_evolve->add_option("--lambda-prime", oracle_params.lambda_prime)
      ->capture_default_str();
  add_state_options(oracle_evolve, oracle_params);
  oracle_evolve->add_option("--t", oracle_t, "Evolution time")
      ->capture_default_str();

  double ok_x = 0.0, ok_y = 0.0, ok_z = 0.0;
  int grid = 64, refine = 30;
  auto* oracle_discord = oracle_cmd->add_subcommand(
      "discord", "Compare closed-form discord against the measurement sweep");
  oracle_discord->add_option("--kx", ok_x)->capture_default_str();
  oracle_discord->add_option("--ky", ok_y)->capture_default_str();
  oracle_discord->add_option("--kz", ok_z)->capture_default_str();
  oracle_discord->add_option("--grid", grid, "Coarse lattice size (>= 64)")
      ->capture_default_str();
  oracle_discord->add_option("--refine", refine, "Refinement rounds")
      ->capture_default_str();
  oracle_cmd->require_subcommand(1);

  try {
    std::vector<std::string> args =
        merge_config_file(std::vector<std::string>(argv + 1, argv + argc));
    std::reverse(args.begin(), args.end());  // CLI11 consumes from the back
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const lmg::invalid_parameter& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    std::cout << std::setprecision(12);
    if (*simulate) {
      warn_if_critical(sim_config.params.lambda);
      const auto rows = lmg::run_timeseries(sim_config);
      lmg::emit_outputs(rows, sim_config);
      report(rows, sim_config);
    } else if (*sweep) {
      sweep_config.sweep.policy = prime_equal_lambda
                                      ? lmg::LambdaPrimePolicy::EqualLambda
                                      : lmg::LambdaPrimePolicy::Fixed;
      sweep_config.params.lambda = sweep_config.sweep.lambda_min;
      if (prime_equal_lambda) {
        sweep_config.params.lambda_prime = sweep_config.sweep.lambda_min;
      }
      if (sweep_config.sweep.lambda_min <= 1.0 &&
          sweep_config.sweep.lambda_max >= 1.0) {
        warn_if_critical(1.0);
      }
      const auto rows = lmg::run_sweep(sweep_config);
      lmg::emit_outputs(rows, sweep_config);
      report(rows, sweep_config);
    } else if (*figure) {
      lmg::RunConfig config = lmg::figure_preset(figure_name, out_dir);
      if (figure->count("--t-max") > 0) config.t_max = figure_t_max;
      if (figure->count("--steps") > 0) config.steps = figure_steps;
      const auto rows = config.mode == lmg::RunMode::Sweep
                            ? lmg::run_sweep(config)
                            : lmg::run_timeseries(config);
      lmg::emit_outputs(rows, config);
      report(rows, config);
    } else if (*oracle_evolve) {
      oracle_params.validate();
      warn_if_critical(oracle_params.lambda);
      const lmg::XState closed = lmg::reduced_state(oracle_params, oracle_t);
      const lmg::XState initial = lmg::initial_xstate(
          oracle_params.kx, oracle_params.ky, oracle_params.kz);
      const lmg::XState dense =
          lmg::oracle::dense_evolve(oracle_params, initial, oracle_t);
      print_xstate("closed:", closed);
      print_xstate("dense: ", dense);
      const double gap =
          (closed.assemble() - dense.assemble()).cwiseAbs().maxCoeff();
      std::cout << "max entrywise gap = " << gap << "\n";
    } else if (*oracle_discord) {
      const lmg::XState state = lmg::initial_xstate(ok_x, ok_y, ok_z);
      const lmg::DiscordResult closed = lmg::discord_xstate(state);
      const auto brute = lmg::oracle::discord_bruteforce(state, grid, refine);
      std::cout << "closed form: Q=" << closed.discord
                << " (D1=" << closed.d1 << ", D2=" << closed.d2
                << ") classical=" << closed.classical
                << " mutual=" << closed.mutual_info << "\n";
      std::cout << "sweep:       Q=" << brute.discord
                << " classical=" << brute.classical
                << " at theta=" << brute.best.theta
                << " phi=" << brute.best.phi
                << " (coarse Q=" << brute.coarse_discord << ")\n";
      std::cout << "gap = " << std::abs(closed.discord - brute.discord)
                << "\n";
    }
  } catch (const lmg::invalid_parameter& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const lmg::invalid_state& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
