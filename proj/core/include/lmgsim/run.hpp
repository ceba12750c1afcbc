#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "lmgsim/correlations.hpp"
#include "lmgsim/reduced_dynamics.hpp"

namespace lmg {

enum class RunMode { Timeseries, Sweep };

enum class LambdaPrimePolicy { Fixed, EqualLambda };

// Lambda axis of a sweep; lambda_prime either stays at params.lambda_prime or
// tracks lambda.
struct SweepAxes {
  double lambda_min = 0.25;
  double lambda_max = 2.0;
  int lambda_steps = 2;
  LambdaPrimePolicy policy = LambdaPrimePolicy::Fixed;
};

struct RunConfig {
  RunMode mode = RunMode::Timeseries;
  ModelParams params;
  double t_max = 4.0;
  int steps = 801;  // time points, endpoints included
  SweepAxes sweep;
  std::filesystem::path out_path;
  bool emit_plot = false;

  void validate() const;
};

// One CSV row: the grid point, every correlation measure, and the reduced
// state itself.
struct OutputRow {
  double t = 0.0;
  double lambda = 0.0;
  double lambda_prime = 0.0;
  CorrelationRecord record;
  XState state;
};

// Evaluates the closed-form dynamics on the config's time grid. Rows come out
// ordered by (lambda, lambda_prime, t); all values are checked finite.
std::vector<OutputRow> run_timeseries(const RunConfig& config);
std::vector<OutputRow> run_sweep(const RunConfig& config);

extern const char* const kCsvHeader;

// Shortest round-trip decimal formatting, LF line endings.
void write_csv(std::ostream& os, const std::vector<OutputRow>& rows);
std::string csv_string(const std::vector<OutputRow>& rows);

// Writes the CSV to config.out_path (parent directories are created) and,
// when config.emit_plot is set, a gnuplot script next to it that references
// the CSV by file name only.
void emit_outputs(const std::vector<OutputRow>& rows, const RunConfig& config);

// Bundled figure presets: fig1 (sweep over lambda with lambda' = lambda) and
// fig2a..fig5d (time series at fixed couplings for pure and mixed initial
// states). The returned config writes <name>.csv under out_dir.
std::vector<std::string> figure_names();
RunConfig figure_preset(const std::string& name,
                        const std::filesystem::path& out_dir);

}  // namespace lmg
