#pragma once

#include <cstddef>
#include <optional>
#include <vector>

namespace sgdol {

// One reported iteration. f_value / true_grad_sq_norm describe x_t (the
// iterate the step at t starts from); stepsize is what step t used, one entry
// for global stepsizes, d entries for per-coordinate ones, empty when the
// optimizer has no stepsize notion (Adam).
struct TrajectoryRecord {
  std::size_t t = 1;
  std::optional<double> f_value;
  std::optional<double> true_grad_sq_norm;
  std::vector<double> stepsize;
  std::optional<double> beta;
  double surrogate_loss_value = 0.0;
  double cumulative_regret_lhs = 0.0;  // Σ_{s≤t} ℓ_s(η_s)

  double stepsize_mean() const;

  friend bool operator==(const TrajectoryRecord&, const TrajectoryRecord&) = default;
};

}  // namespace sgdol
