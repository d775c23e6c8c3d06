#pragma once

#include <memory>
#include <optional>
#include <span>

#include "sgdol/core/vec.hpp"
#include "sgdol/oracles/oracle.hpp"
#include "sgdol/online/regret.hpp"
#include "sgdol/optimizers/config.hpp"

namespace sgdol {

struct StepReport {
  // Stepsize(s) applied to g: one entry (global), d entries (per-coordinate),
  // empty for Adam.
  Vec eta_used;
  std::optional<double> beta_used;
  std::optional<double> surrogate_value;
  // 2 for the SGDOL family; baselines receive the pair but only read g.
  int gradients_consumed = 1;
};

// Owns the iterate and the kind-specific state. step() performs one round
// on a pair sampled at x().
class Optimizer {
public:
  virtual ~Optimizer() = default;

  virtual OptimizerKind kind() const = 0;
  const Vec& x() const noexcept { return x_; }

  // Throws ContractViolation on dimension mismatch and DivergenceError if the
  // new iterate is not finite.
  StepReport step(const GradientPair& pair);

  // Ledger of the (η-)stepsize learner, when the optimizer has one.
  virtual const RegretLedger* ledger() const { return nullptr; }
  // Per-coordinate ledgers of sgdol_coord.
  virtual std::span<const RegretLedger> coordinate_ledgers() const { return {}; }

protected:
  explicit Optimizer(Vec x0) : x_(std::move(x0)) {}

  virtual StepReport do_step(const GradientPair& pair) = 0;

  Vec x_;
};

std::unique_ptr<Optimizer> make_optimizer(const OptimizerConfig& config, Vec x0);

}  // namespace sgdol
