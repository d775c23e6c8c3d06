#include "sgdol/optimizers/sgdol.hpp"

#include "sgdol/core/error.hpp"
#include "sgdol/kernels/kernels.hpp"

namespace sgdol {

StepReport Optimizer::step(const GradientPair& pair) {
  if (pair.g.dim() != x_.dim() || pair.g_prime.dim() != x_.dim()) {
    throw ContractViolation("optimizer step: gradient pair dimension does not match iterate");
  }
  StepReport report = do_step(pair);
  if (!x_.is_finite()) throw DivergenceError("optimizer iterate became non-finite");
  return report;
}

SgdolGlobal::SgdolGlobal(Vec x0, double M, double alpha, Curvature curvature,
                         bool keep_regret_steps)
    : Optimizer(std::move(x0)),
      learner_(alpha, M, curvature),
      ledger_(alpha, M, curvature, keep_regret_steps) {}

StepReport SgdolGlobal::do_step(const GradientPair& pair) {
  const double eta = learner_.stepsize();
  const SurrogateLoss loss(learner_.M(), pair.g, pair.g_prime, learner_.curvature());
  axpy(-eta, pair.g, x_);
  learner_.observe(loss);
  const double value = ledger_.record(loss, eta);
  return {Vec{eta}, std::nullopt, value, 2};
}

SgdolCoord::SgdolCoord(Vec x0, double M, double alpha, Curvature curvature,
                       bool keep_regret_steps)
    : Optimizer(std::move(x0)), learner_(x_.dim(), alpha, M, curvature) {
  ledgers_.reserve(x_.dim());
  for (std::size_t i = 0; i < x_.dim(); ++i) {
    ledgers_.emplace_back(alpha, M, curvature, keep_regret_steps);
  }
}

StepReport SgdolCoord::do_step(const GradientPair& pair) {
  Vec eta = learner_.stepsizes();
  kernels::hadamard_sub(eta.span(), pair.g.span(), x_.mutable_span());
  double value = 0.0;
  for (std::size_t i = 0; i < x_.dim(); ++i) {
    const SurrogateLoss loss(learner_.M(), pair.g[i] * pair.g_prime[i], pair.g[i] * pair.g[i],
                             learner_.curvature());
    value += ledgers_[i].record(loss, eta[i]);
  }
  learner_.observe(pair.g, pair.g_prime);
  return {std::move(eta), std::nullopt, value, 2};
}

SgdolMomentum::SgdolMomentum(Vec x0, double M, double alpha, bool clamp_beta_to_zero,
                             bool keep_regret_steps)
    : Optimizer(std::move(x0)),
      eta_learner_(alpha, M, Curvature::kDoubled),
      beta_learner_(alpha, M, Curvature::kDoubled),
      eta_ledger_(alpha, M, Curvature::kDoubled, keep_regret_steps),
      beta_ledger_(alpha, M, Curvature::kDoubled, keep_regret_steps),
      z_(x_.dim()),
      clamp_beta_to_zero_(clamp_beta_to_zero) {}

StepReport SgdolMomentum::do_step(const GradientPair& pair) {
  const double M = eta_learner_.M();
  const double eta = eta_learner_.stepsize();
  const double beta = clamp_beta_to_zero_ ? 0.0 : beta_learner_.stepsize();
  const SurrogateLoss eta_loss(M, pair.g, pair.g_prime, Curvature::kDoubled);
  const SurrogateLoss beta_loss(M, z_, pair.g_prime, Curvature::kDoubled);

  axpy(-eta, pair.g, x_);
  axpy(-beta, z_, x_);

  const double carry = eta > 0.0 ? beta / eta : 0.0;
  for (auto& v : z_.mutable_span()) v *= carry;
  axpy(1.0, pair.g, z_);

  eta_learner_.observe(eta_loss);
  beta_learner_.observe(beta_loss);
  const double value = eta_ledger_.record(eta_loss, eta) + beta_ledger_.record(beta_loss, beta);
  return {Vec{eta}, beta, value, 2};
}

}  // namespace sgdol
