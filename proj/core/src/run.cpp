#include "lmgsim/run.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>
#include <system_error>

namespace lmg {

namespace {

std::string format_double(double value) {
  if (value == 0.0) value = 0.0;  // normalize -0
  std::array<char, 32> buffer;
  const auto [end, ec] =
      std::to_chars(buffer.data(), buffer.data() + buffer.size(), value);
  if (ec != std::errc()) throw invariant_violation("number formatting failed");
  return std::string(buffer.data(), end);
}

void check_finite(const OutputRow& row) {
  const double values[] = {row.t,
                           row.lambda,
                           row.lambda_prime,
                           row.record.discord,
                           row.record.classical,
                           row.record.mutual_info,
                           row.record.concurrence,
                           row.record.eof,
                           row.record.purity,
                           row.state.a,
                           row.state.b,
                           row.state.c,
                           row.state.y,
                           row.state.z.real(),
                           row.state.z.imag()};
  for (double v : values) {
    if (!std::isfinite(v)) {
      throw invariant_violation("non-finite value at t=" +
                                std::to_string(row.t) +
                                ", lambda=" + std::to_string(row.lambda));
    }
  }
}

OutputRow evaluate_point(const EvolutionContext& ctx, double t) {
  OutputRow row;
  row.t = t;
  row.lambda = ctx.params.lambda;
  row.lambda_prime = ctx.params.lambda_prime;
  row.state = reduced_state(ctx, t);
  row.record = evaluate(row.state, t);
  check_finite(row);
  return row;
}

std::vector<double> time_grid(double t_max, int steps) {
  std::vector<double> grid(steps);
  for (int i = 0; i < steps; ++i) grid[i] = t_max * i / (steps - 1);
  return grid;
}

void write_plot_script(const RunConfig& config);

}  // namespace

void RunConfig::validate() const {
  params.validate();
  if (!(t_max > 0.0) || !std::isfinite(t_max)) {
    throw invalid_parameter("t_max must be positive, got " +
                            std::to_string(t_max));
  }
  if (steps < 2) {
    throw invalid_parameter("steps must be >= 2, got " +
                            std::to_string(steps));
  }
  if (mode == RunMode::Sweep) {
    if (!(sweep.lambda_min > 0.0) || !std::isfinite(sweep.lambda_max)) {
      throw invalid_parameter("sweep lambda range must lie in (0, inf)");
    }
    if (sweep.lambda_max < sweep.lambda_min) {
      throw invalid_parameter("sweep lambda_max must be >= lambda_min");
    }
    if (sweep.lambda_steps < 1) {
      throw invalid_parameter("sweep lambda_steps must be >= 1");
    }
  }
}

std::vector<OutputRow> run_timeseries(const RunConfig& config) {
  config.validate();
  const EvolutionContext ctx = make_context(config.params);

  std::vector<OutputRow> rows;
  rows.reserve(config.steps);
  for (double t : time_grid(config.t_max, config.steps)) {
    rows.push_back(evaluate_point(ctx, t));
  }
  return rows;
}

std::vector<OutputRow> run_sweep(const RunConfig& config) {
  config.validate();

  std::vector<OutputRow> rows;
  rows.reserve(static_cast<size_t>(config.sweep.lambda_steps) * config.steps);
  const auto times = time_grid(config.t_max, config.steps);
  for (int i = 0; i < config.sweep.lambda_steps; ++i) {
    ModelParams params = config.params;
    params.lambda =
        config.sweep.lambda_steps == 1
            ? config.sweep.lambda_min
            : config.sweep.lambda_min +
                  (config.sweep.lambda_max - config.sweep.lambda_min) * i /
                      (config.sweep.lambda_steps - 1);
    if (config.sweep.policy == LambdaPrimePolicy::EqualLambda) {
      params.lambda_prime = params.lambda;
    }
    const EvolutionContext ctx = make_context(params);
    for (double t : times) rows.push_back(evaluate_point(ctx, t));
  }
  return rows;
}

const char* const kCsvHeader =
    "t,lambda,lambda_prime,discord,classical,mutual_info,concurrence,eof,"
    "purity,a,b,c,y,re_z,im_z";

void write_csv(std::ostream& os, const std::vector<OutputRow>& rows) {
  os << kCsvHeader << '\n';
  for (const OutputRow& row : rows) {
    os << format_double(row.t) << ',' << format_double(row.lambda) << ','
       << format_double(row.lambda_prime) << ','
       << format_double(row.record.discord) << ','
       << format_double(row.record.classical) << ','
       << format_double(row.record.mutual_info) << ','
       << format_double(row.record.concurrence) << ','
       << format_double(row.record.eof) << ','
       << format_double(row.record.purity) << ','
       << format_double(row.state.a) << ',' << format_double(row.state.b)
       << ',' << format_double(row.state.c) << ','
       << format_double(row.state.y) << ','
       << format_double(row.state.z.real()) << ','
       << format_double(row.state.z.imag()) << '\n';
  }
}

std::string csv_string(const std::vector<OutputRow>& rows) {
  std::ostringstream os;
  write_csv(os, rows);
  return os.str();
}

void emit_outputs(const std::vector<OutputRow>& rows, const RunConfig& config) {
  if (config.out_path.empty()) {
    throw invalid_parameter("output path is empty");
  }
  const auto parent = config.out_path.parent_path();
  if (!parent.empty()) std::filesystem::create_directories(parent);

  std::ofstream file(config.out_path, std::ios::binary | std::ios::trunc);
  if (!file) {
    throw invariant_violation("cannot open output file " +
                              config.out_path.string());
  }
  write_csv(file, rows);
  file.flush();
  if (!file) {
    throw invariant_violation("write failed for " + config.out_path.string());
  }

  if (config.emit_plot) write_plot_script(config);
}

namespace {

void write_plot_script(const RunConfig& config) {
  std::filesystem::path script_path = config.out_path;
  script_path.replace_extension(".gp");
  const std::string csv_name = config.out_path.filename().string();
  const std::string image_name =
      config.out_path.filename().replace_extension(".png").string();

  std::ofstream script(script_path, std::ios::binary | std::ios::trunc);
  if (!script) {
    throw invariant_violation("cannot open plot script " +
                              script_path.string());
  }
  script << "# gnuplot script; run from this directory: gnuplot "
         << script_path.filename().string() << '\n'
         << "set datafile separator ','\n"
         << "set terminal pngcairo size 960,640\n"
         << "set output '" << image_name << "'\n";
  if (config.mode == RunMode::Timeseries) {
    script << "set xlabel 't'\n"
           << "set ylabel 'correlation'\n"
           << "set key top right\n"
           << "plot '" << csv_name
           << "' skip 1 using 1:4 with lines lw 2 title 'quantum discord', \\\n"
           << "     '" << csv_name
           << "' skip 1 using 1:8 with lines lw 2 title 'entanglement of "
              "formation'\n";
  } else {
    script << "set xlabel 't'\n"
           << "set ylabel 'lambda'\n"
           << "set view map\n"
           << "splot '" << csv_name
           << "' skip 1 using 1:2:4 with points pt 5 ps 0.5 palette title "
              "'quantum discord'\n";
  }
  script.flush();
  if (!script) {
    throw invariant_violation("write failed for " + script_path.string());
  }
}

}  // namespace

std::vector<std::string> figure_names() {
  std::vector<std::string> names = {"fig1"};
  for (int fig = 2; fig <= 5; ++fig) {
    for (char panel = 'a'; panel <= 'd'; ++panel) {
      names.push_back("fig" + std::to_string(fig) + panel);
    }
  }
  return names;
}

RunConfig figure_preset(const std::string& name,
                        const std::filesystem::path& out_dir) {
  RunConfig config;
  config.t_max = 4.0;
  config.steps = 801;
  config.emit_plot = true;
  config.out_path = out_dir / (name + ".csv");
  config.params.kx = 1.0;
  config.params.ky = -1.0;
  config.params.kz = 1.0;

  if (name == "fig1") {
    config.mode = RunMode::Sweep;
    config.params.n_spins = 500;
    config.sweep = {0.25, 2.0, 141, LambdaPrimePolicy::EqualLambda};
    config.params.lambda = config.sweep.lambda_min;
    config.params.lambda_prime = config.sweep.lambda_min;
    return config;
  }

  if (name.size() == 5 && name.compare(0, 3, "fig") == 0) {
    const char fig = name[3];
    const char panel = name[4];
    if (fig >= '2' && fig <= '5' && panel >= 'a' && panel <= 'd') {
      static constexpr double kPanelCoupling[4] = {0.5, 2.0, 3.5, 5.0};
      config.mode = RunMode::Timeseries;
      config.params.n_spins = 1000;
      config.params.lambda = (fig == '2' || fig == '4') ? 0.75 : 1.25;
      config.params.lambda_prime = kPanelCoupling[panel - 'a'];
      if (fig == '4' || fig == '5') {
        config.params.ky = -0.2;
        config.params.kz = 0.2;
      }
      return config;
    }
  }

  throw invalid_parameter("unknown figure preset '" + name +
                          "'; expected fig1 or fig2a..fig5d");
}

}  // namespace lmg
