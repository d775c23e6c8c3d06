#include "sgdol/harness/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <set>
#include <thread>

#include "sgdol/core/error.hpp"
#include "sgdol/oracles/quadratic.hpp"
#include "sgdol/oracles/rosenbrock.hpp"
#include "sgdol/oracles/sigmoid_loss.hpp"

namespace sgdol {

void validate(const ExperimentSpec& spec) {
  std::vector<std::string> bad;
  if (spec.T < 1) bad.push_back("T");
  if (spec.repetitions < 1) bad.push_back("repetitions");
  if (spec.optimizers.empty()) bad.push_back("optimizer");

  const auto& o = spec.oracle;
  switch (o.kind) {
    case OracleKind::kRosenbrock:
      if (!(o.sigma >= 0.0) || !std::isfinite(o.sigma)) bad.push_back("oracle.sigma");
      break;
    case OracleKind::kSigmoid:
      if (o.dataset.empty()) bad.push_back("oracle.dataset");
      break;
    case OracleKind::kQuadratic: {
      const auto d = o.diagonal.size();
      if (d == 0 || std::any_of(o.diagonal.begin(), o.diagonal.end(),
                                [](double a) { return !(a > 0.0); })) {
        bad.push_back("oracle.diagonal");
      }
      if (!o.noise.empty() && (o.noise.size() != d ||
                               std::any_of(o.noise.begin(), o.noise.end(),
                                           [](double s) { return !(s >= 0.0); }))) {
        bad.push_back("oracle.noise");
      }
      if (!o.start.empty() && o.start.size() != d) bad.push_back("oracle.start");
      break;
    }
  }

  std::set<std::string> names;
  for (const auto& opt : spec.optimizers) {
    const std::string prefix = "optimizer." + opt.name + ".";
    if (opt.name.empty() || !names.insert(opt.name).second) {
      bad.push_back("optimizer." + opt.name + " (name)");
    }
    // sgd_gl defaults are resolved later from the oracle.
    if (opt.kind == OptimizerKind::kSgdGl) {
      if (!(opt.M > 0.0)) bad.push_back(prefix + "M");
      continue;
    }
    try {
      validate(opt, prefix);
    } catch (const ValidationError& e) {
      bad.insert(bad.end(), e.fields().begin(), e.fields().end());
    }
  }
  if (!bad.empty()) throw ValidationError(std::move(bad));
}

RngStream oracle_stream(std::uint64_t seed, std::size_t repetition) {
  return RngStream(seed, stream_id(static_cast<std::uint64_t>(StreamPurpose::kOracle), repetition));
}

RngStream output_stream(std::uint64_t seed, std::size_t optimizer, std::size_t repetition) {
  return RngStream(seed, stream_id(static_cast<std::uint64_t>(StreamPurpose::kOutputIndex),
                                   optimizer, repetition));
}

std::shared_ptr<const StochasticOracle> build_oracle(const OracleSpec& spec, std::uint64_t seed) {
  switch (spec.kind) {
    case OracleKind::kRosenbrock:
      return std::make_shared<RosenbrockOracle>(spec.sigma);
    case OracleKind::kQuadratic: {
      const std::size_t d = spec.diagonal.size();
      Vec noise = spec.noise.empty() ? Vec(d) : Vec(spec.noise);
      Vec start = spec.start.empty() ? Vec(d, 1.0) : Vec(spec.start);
      return std::make_shared<QuadraticOracle>(Vec(spec.diagonal), std::move(noise),
                                               std::move(start));
    }
    case OracleKind::kSigmoid: {
      LibsvmOptions options;
      options.append_bias = spec.append_bias;
      auto data = std::make_shared<Dataset>(load_libsvm(spec.dataset, options));
      if (spec.balance) {
        RngStream rng(seed, stream_id(static_cast<std::uint64_t>(StreamPurpose::kBalance)));
        data = std::make_shared<Dataset>(balance_subsample(*data, rng));
      }
      const std::size_t batch = spec.batch_size == 0 ? data->size() : spec.batch_size;
      if (batch > data->size()) {
        throw ValidationError({"oracle.batch_size"}, "exceeds dataset rows");
      }
      return std::make_shared<SigmoidLossOracle>(std::move(data), batch);
    }
  }
  throw ContractViolation("build_oracle: unknown oracle kind");
}

void resolve_defaults(ExperimentSpec& spec, const StochasticOracle& oracle) {
  for (auto& opt : spec.optimizers) {
    if (opt.kind != OptimizerKind::kSgdGl) continue;
    if (opt.gl_horizon == 0.0) opt.gl_horizon = static_cast<double>(spec.T);
    if (opt.gl_sigma == 0.0 && spec.oracle.kind == OracleKind::kRosenbrock) {
      opt.gl_sigma = spec.oracle.sigma;
    }
    if (opt.gl_f_gap == 0.0 && oracle.has_exact_f() && oracle.f_star()) {
      opt.gl_f_gap = oracle.f(oracle.initial_point()) - *oracle.f_star();
    }
    validate(opt, "optimizer." + opt.name + ".");
  }
}

OptimizerSeries average_runs(const std::string& name, OptimizerKind kind,
                             const std::vector<RunResult>& runs, std::optional<double> f_star) {
  OptimizerSeries series;
  series.name = name;
  series.kind = kind;
  series.has_opt_gap = f_star.has_value();
  if (runs.empty()) return series;

  const std::size_t points = runs.front().records.size();
  const std::size_t width = runs.front().records.empty()
                                ? 1
                                : std::max<std::size_t>(1, runs.front().records[0].stepsize.size());
  series.stepsize_width = width;
  const double nan = std::numeric_limits<double>::quiet_NaN();
  const double n = static_cast<double>(runs.size());

  series.points.resize(points);
  for (std::size_t j = 0; j < points; ++j) {
    SeriesPoint& p = series.points[j];
    p.t = runs.front().records[j].t;
    double grad = 0.0, f = 0.0, step = 0.0;
    std::vector<double> coords(width > 1 ? width : 0, 0.0);
    for (const auto& run : runs) {
      const TrajectoryRecord& r = run.records[j];
      grad += r.true_grad_sq_norm.value_or(nan);
      f += r.f_value.value_or(nan);
      step += r.stepsize_mean();
      for (std::size_t i = 0; i < coords.size(); ++i) coords[i] += r.stepsize[i];
    }
    p.grad_sq_norm = grad / n;
    p.f_value = f / n;
    if (f_star) p.opt_gap = p.f_value - *f_star;
    p.stepsize_mean = step / n;
    for (auto& c : coords) c /= n;
    p.stepsize = std::move(coords);
  }
  return series;
}

ResultTable run_experiment(const ExperimentSpec& input) {
  validate(input);
  const auto oracle = build_oracle(input.oracle, input.seed);
  ExperimentSpec spec = input;
  resolve_defaults(spec, *oracle);

  const std::size_t report_every =
      spec.report_every == 0 ? default_report_every(spec.T) : spec.report_every;
  const std::size_t n_opt = spec.optimizers.size();
  const std::size_t n_rep = spec.repetitions;
  std::vector<std::vector<RunResult>> results(n_opt, std::vector<RunResult>(n_rep));

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t job = next++; job < n_opt * n_rep; job = next++) {
      const std::size_t i = job / n_rep, r = job % n_rep;
      try {
        auto optimizer = make_optimizer(spec.optimizers[i], oracle->initial_point());
        RngStream noise = oracle_stream(spec.seed, r);
        RngStream pick = output_stream(spec.seed, i, r);
        results[i][r] = run(*optimizer, *oracle, spec.T, noise, pick, report_every);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  std::size_t threads = spec.threads != 0 ? spec.threads
                                          : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, n_opt * n_rep);
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t k = 0; k < threads; ++k) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  ResultTable table;
  for (std::size_t i = 0; i < n_opt; ++i) {
    auto series = average_runs(spec.optimizers[i].name, spec.optimizers[i].kind, results[i],
                               oracle->f_star());
    for (const auto& r : results[i]) series.output_indices.push_back(r.output_index);
    if (spec.keep_raw) series.raw = std::move(results[i]);
    table.series.push_back(std::move(series));
  }
  return table;
}

}  // namespace sgdol
