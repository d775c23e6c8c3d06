#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sgdol/optimizers/config.hpp"
#include "sgdol/optimizers/run.hpp"

namespace sgdol {

enum class OracleKind { kRosenbrock, kSigmoid, kQuadratic };

struct OracleSpec {
  OracleKind kind = OracleKind::kRosenbrock;
  // rosenbrock
  double sigma = 0.0;
  // sigmoid
  std::filesystem::path dataset;
  std::size_t batch_size = 0;  // 0 = full batch
  bool balance = false;
  bool append_bias = true;
  // quadratic
  std::vector<double> diagonal;
  std::vector<double> noise;
  std::vector<double> start;
};

struct ExperimentSpec {
  OracleSpec oracle;
  std::vector<OptimizerConfig> optimizers;
  std::size_t T = 0;
  std::size_t repetitions = 1;
  std::uint64_t seed = 0;
  std::size_t report_every = 0;  // 0 = default_report_every(T)
  std::filesystem::path output;
  bool keep_raw = false;
  std::size_t threads = 0;  // 0 = hardware concurrency
};

// Throws ValidationError naming every offending field.
void validate(const ExperimentSpec& spec);

// Stream purposes. The oracle stream depends only on the repetition, so every
// optimizer sees the same noise in a given repetition; the output-index
// stream is private to (optimizer, repetition).
enum class StreamPurpose : std::uint64_t { kOracle = 1, kOutputIndex = 2, kBalance = 3 };
RngStream oracle_stream(std::uint64_t seed, std::size_t repetition);
RngStream output_stream(std::uint64_t seed, std::size_t optimizer, std::size_t repetition);

// Builds the oracle (loading and optionally balancing the dataset).
std::shared_ptr<const StochasticOracle> build_oracle(const OracleSpec& spec, std::uint64_t seed);

struct SeriesPoint {
  std::size_t t = 0;
  double grad_sq_norm = 0.0;
  double f_value = 0.0;
  std::optional<double> opt_gap;
  double stepsize_mean = 0.0;
  std::vector<double> stepsize;  // per-coordinate means, only when width > 1

  friend bool operator==(const SeriesPoint&, const SeriesPoint&) = default;
};

struct OptimizerSeries {
  std::string name;
  OptimizerKind kind = OptimizerKind::kSgd;
  bool has_opt_gap = false;
  std::size_t stepsize_width = 1;
  std::vector<SeriesPoint> points;
  std::vector<std::size_t> output_indices;  // sampled k per repetition
  std::vector<RunResult> raw;  // per repetition, when keep_raw is set
};

struct ResultTable {
  std::vector<OptimizerSeries> series;
};

// Repetition-averaged series of the given runs (arithmetic means).
OptimizerSeries average_runs(const std::string& name, OptimizerKind kind,
                             const std::vector<RunResult>& runs, std::optional<double> f_star);

// Executes repetitions × optimizers runs (in parallel when threads > 1; the
// result does not depend on scheduling) and averages them. Output files are
// not written here; see write_outputs.
ResultTable run_experiment(const ExperimentSpec& spec);

// Fills in sgd_gl constants the user left at zero from the oracle: σ from
// the noise level, T from the spec, f_gap = f(x₁) − f*.
void resolve_defaults(ExperimentSpec& spec, const StochasticOracle& oracle);

// CSV per optimizer plus summary.json in spec.output.
void write_outputs(const ExperimentSpec& spec, const ResultTable& table);

}  // namespace sgdol
