#include "sgdol/optimizers/baselines.hpp"

#include <cmath>

#include "sgdol/kernels/kernels.hpp"

namespace sgdol {

Sgd::Sgd(Vec x0, double lr, OptimizerKind reported_kind)
    : Optimizer(std::move(x0)), lr_(lr), kind_(reported_kind) {}

StepReport Sgd::do_step(const GradientPair& pair) {
  axpy(-lr_, pair.g, x_);
  return {Vec{lr_}, std::nullopt, std::nullopt, 1};
}

AdagradGlobal::AdagradGlobal(Vec x0, double lr) : Optimizer(std::move(x0)), lr_(lr) {}

StepReport AdagradGlobal::do_step(const GradientPair& pair) {
  accumulator_ += sq_norm(pair.g);
  const double eta = accumulator_ > 0.0 ? lr_ / std::sqrt(accumulator_) : 0.0;
  axpy(-eta, pair.g, x_);
  return {Vec{eta}, std::nullopt, std::nullopt, 1};
}

AdagradCoord::AdagradCoord(Vec x0, double lr)
    : Optimizer(std::move(x0)), lr_(lr), accumulator_(x_.dim(), 0.0) {}

StepReport AdagradCoord::do_step(const GradientPair& pair) {
  Vec eta(x_.dim());
  for (std::size_t i = 0; i < x_.dim(); ++i) {
    accumulator_[i] += pair.g[i] * pair.g[i];
    eta[i] = accumulator_[i] > 0.0 ? lr_ / std::sqrt(accumulator_[i]) : 0.0;
  }
  kernels::hadamard_sub(eta.span(), pair.g.span(), x_.mutable_span());
  return {std::move(eta), std::nullopt, std::nullopt, 1};
}

Adam::Adam(Vec x0, double lr, double beta1, double beta2, double epsilon)
    : Optimizer(std::move(x0)),
      lr_(lr),
      beta1_(beta1),
      beta2_(beta2),
      epsilon_(epsilon),
      m_(x_.dim(), 0.0),
      v_(x_.dim(), 0.0) {}

StepReport Adam::do_step(const GradientPair& pair) {
  beta1_power_ *= beta1_;
  beta2_power_ *= beta2_;
  const double c1 = 1.0 - beta1_power_;
  const double c2 = 1.0 - beta2_power_;
  for (std::size_t i = 0; i < x_.dim(); ++i) {
    const double g = pair.g[i];
    m_[i] = beta1_ * m_[i] + (1.0 - beta1_) * g;
    v_[i] = beta2_ * v_[i] + (1.0 - beta2_) * g * g;
    const double m_hat = m_[i] / c1;
    const double v_hat = v_[i] / c2;
    x_[i] -= lr_ * m_hat / (std::sqrt(v_hat) + epsilon_);
  }
  return {Vec{}, std::nullopt, std::nullopt, 1};
}

}  // namespace sgdol
