#include "sgdol/core/error.hpp"
#include "sgdol/optimizers/baselines.hpp"
#include "sgdol/optimizers/sgdol.hpp"

namespace sgdol {

std::unique_ptr<Optimizer> make_optimizer(const OptimizerConfig& c, Vec x0) {
  validate(c);
  switch (c.kind) {
    case OptimizerKind::kSgdolGlobal:
      return std::make_unique<SgdolGlobal>(std::move(x0), c.M, c.alpha, c.curvature,
                                           c.keep_regret_steps);
    case OptimizerKind::kSgdolCoord:
      return std::make_unique<SgdolCoord>(std::move(x0), c.M, c.alpha, c.curvature,
                                          c.keep_regret_steps);
    case OptimizerKind::kSgdolMomentum:
      return std::make_unique<SgdolMomentum>(std::move(x0), c.M, c.alpha, c.clamp_beta_to_zero,
                                             c.keep_regret_steps);
    case OptimizerKind::kSgd:
      return std::make_unique<Sgd>(std::move(x0), c.lr);
    case OptimizerKind::kAdagradGlobal:
      return std::make_unique<AdagradGlobal>(std::move(x0), c.lr);
    case OptimizerKind::kAdagradCoord:
      return std::make_unique<AdagradCoord>(std::move(x0), c.lr);
    case OptimizerKind::kAdam:
      return std::make_unique<Adam>(std::move(x0), c.lr, c.adam_beta1, c.adam_beta2,
                                    c.adam_epsilon);
    case OptimizerKind::kSgdGl:
      return std::make_unique<Sgd>(std::move(x0), sgd_gl_stepsize(c), OptimizerKind::kSgdGl);
  }
  throw ContractViolation("make_optimizer: unknown optimizer kind");
}

}  // namespace sgdol
