#pragma once

#include <vector>

#include "sgdol/online/ftrl.hpp"
#include "sgdol/online/regret.hpp"
#include "sgdol/optimizers/optimizer.hpp"

namespace sgdol {

// SGD with a single stepsize learned by FTRL on the surrogate losses.
// η_t is read from the learner before the round's pair is observed.
class SgdolGlobal final : public Optimizer {
public:
  SgdolGlobal(Vec x0, double M, double alpha, Curvature curvature = Curvature::kStandard,
              bool keep_regret_steps = false);

  OptimizerKind kind() const override { return OptimizerKind::kSgdolGlobal; }
  const FtrlState& learner() const noexcept { return learner_; }
  const RegretLedger* ledger() const override { return &ledger_; }

protected:
  StepReport do_step(const GradientPair& pair) override;

private:
  FtrlState learner_;
  RegretLedger ledger_;
};

// One stepsize per coordinate, each learned from that coordinate's entries.
class SgdolCoord final : public Optimizer {
public:
  SgdolCoord(Vec x0, double M, double alpha, Curvature curvature = Curvature::kStandard,
             bool keep_regret_steps = false);

  OptimizerKind kind() const override { return OptimizerKind::kSgdolCoord; }
  const CoordFtrlState& learner() const noexcept { return learner_; }
  std::span<const RegretLedger> coordinate_ledgers() const override { return ledgers_; }

protected:
  StepReport do_step(const GradientPair& pair) override;

private:
  CoordFtrlState learner_;
  std::vector<RegretLedger> ledgers_;
};

// x_{t+1} = x_t − η_t g_t − β_t z_t with η and β learned by two FTRL
// instances on ℓ^η(η) = M η² ‖g‖² − η⟨g, g'⟩ and ℓ^β(β) = M β² ‖z‖² − β⟨z, g'⟩.
// The buffer follows z_{t+1} = (β_t/η_t) z_t + g_t, restarting at g_t when
// η_t = 0.
class SgdolMomentum final : public Optimizer {
public:
  SgdolMomentum(Vec x0, double M, double alpha, bool clamp_beta_to_zero = false,
                bool keep_regret_steps = false);

  OptimizerKind kind() const override { return OptimizerKind::kSgdolMomentum; }
  const FtrlState& eta_learner() const noexcept { return eta_learner_; }
  const FtrlState& beta_learner() const noexcept { return beta_learner_; }
  const Vec& buffer() const noexcept { return z_; }
  const RegretLedger* ledger() const override { return &eta_ledger_; }
  const RegretLedger& beta_ledger() const noexcept { return beta_ledger_; }

protected:
  StepReport do_step(const GradientPair& pair) override;

private:
  FtrlState eta_learner_;
  FtrlState beta_learner_;
  RegretLedger eta_ledger_;
  RegretLedger beta_ledger_;
  Vec z_;
  bool clamp_beta_to_zero_;
};

}  // namespace sgdol
