#pragma once

#include <vector>

#include "sgdol/optimizers/optimizer.hpp"

namespace sgdol {

// Constant-stepsize SGD. Also backs sgd_gl, whose stepsize is fixed from
// known problem constants at construction.
class Sgd final : public Optimizer {
public:
  Sgd(Vec x0, double lr, OptimizerKind reported_kind = OptimizerKind::kSgd);

  OptimizerKind kind() const override { return kind_; }
  double lr() const noexcept { return lr_; }

protected:
  StepReport do_step(const GradientPair& pair) override;

private:
  double lr_;
  OptimizerKind kind_;
};

// x ← x − lr · g / √(Σ_{j≤t} ‖g_j‖²); the step is skipped while the
// accumulator is zero.
class AdagradGlobal final : public Optimizer {
public:
  AdagradGlobal(Vec x0, double lr);

  OptimizerKind kind() const override { return OptimizerKind::kAdagradGlobal; }

protected:
  StepReport do_step(const GradientPair& pair) override;

private:
  double lr_;
  double accumulator_ = 0.0;
};

class AdagradCoord final : public Optimizer {
public:
  AdagradCoord(Vec x0, double lr);

  OptimizerKind kind() const override { return OptimizerKind::kAdagradCoord; }

protected:
  StepReport do_step(const GradientPair& pair) override;

private:
  double lr_;
  std::vector<double> accumulator_;
};

class Adam final : public Optimizer {
public:
  Adam(Vec x0, double lr, double beta1, double beta2, double epsilon);

  OptimizerKind kind() const override { return OptimizerKind::kAdam; }

protected:
  StepReport do_step(const GradientPair& pair) override;

private:
  double lr_, beta1_, beta2_, epsilon_;
  std::vector<double> m_, v_;
  double beta1_power_ = 1.0;
  double beta2_power_ = 1.0;
};

}  // namespace sgdol
