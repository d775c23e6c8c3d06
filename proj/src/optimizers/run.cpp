#include "sgdol/optimizers/run.hpp"

#include <algorithm>

#include "sgdol/core/error.hpp"

namespace sgdol {

std::size_t default_report_every(std::size_t T) { return std::max<std::size_t>(1, T / 500); }

RunResult run(Optimizer& optimizer, const StochasticOracle& oracle, std::size_t T,
              RngStream& oracle_rng, RngStream& output_rng, std::size_t report_every) {
  if (T < 1) throw ContractViolation("run: T must be >= 1");
  if (report_every < 1) throw ContractViolation("run: report_every must be >= 1");
  if (optimizer.x().dim() != oracle.dim()) {
    throw ContractViolation("run: optimizer and oracle dimensions differ");
  }

  RunResult result;
  result.records.reserve((T + report_every - 1) / report_every);
  result.output_index = output_rng.uniform_index(T) + 1;

  double cumulative = 0.0;
  for (std::size_t t = 1; t <= T; ++t) {
    if (t == result.output_index) result.output_point = optimizer.x();
    const bool due = (t - 1) % report_every == 0;

    TrajectoryRecord record;
    if (due) {
      record.t = t;
      if (oracle.has_exact_f()) record.f_value = oracle.f(optimizer.x());
      if (oracle.has_exact_grad()) record.true_grad_sq_norm = sq_norm(oracle.grad(optimizer.x()));
    }

    const GradientPair pair = oracle.sample_pair(optimizer.x(), oracle_rng);
    const StepReport report = optimizer.step(pair);
    if (report.surrogate_value) cumulative += *report.surrogate_value;

    if (due) {
      record.stepsize = report.eta_used.entries();
      record.beta = report.beta_used;
      record.surrogate_loss_value = report.surrogate_value.value_or(0.0);
      record.cumulative_regret_lhs = cumulative;
      result.records.push_back(std::move(record));
    }
  }
  result.final_point = optimizer.x();
  return result;
}

}  // namespace sgdol
