#include "sgdol/online/regret.hpp"

#include <algorithm>
#include <cmath>

#include "sgdol/core/error.hpp"
#include "sgdol/online/ftrl.hpp"

namespace sgdol {

RegretLedger::RegretLedger(double alpha, double M, Curvature curvature, bool keep_steps)
    : alpha_(alpha), M_(M), curvature_(curvature), keep_steps_(keep_steps) {
  if (!(alpha > 0.0) || !(M > 0.0)) {
    throw ContractViolation("RegretLedger: alpha and M must be > 0");
  }
}

double RegretLedger::record(const SurrogateLoss& loss, double eta_played) {
  if (loss.M() != M_ || loss.curvature() != curvature_) {
    throw ContractViolation("RegretLedger::record: loss built for a different M or curvature");
  }
  const double value = loss.value(eta_played);
  cumulative_loss_ += value;
  sum_inner_ += loss.inner();
  sum_sq_ += loss.sq();
  ++rounds_;
  if (keep_steps_) steps_.push_back({loss.inner(), loss.sq(), eta_played});
  return value;
}

double RegretLedger::comparator_loss(double eta) const {
  return 0.5 * curvature_factor(curvature_) * M_ * eta * eta * sum_sq_ - eta * sum_inner_;
}

double RegretLedger::best_fixed_stepsize() const {
  const double upper = 2.0 / M_;
  if (sum_sq_ == 0.0) return sum_inner_ > 0.0 ? upper : 0.0;
  const double raw = sum_inner_ / (curvature_factor(curvature_) * M_ * sum_sq_);
  return std::clamp(raw, 0.0, upper);
}

double regret_vs(const RegretLedger& ledger, double eta) {
  if (!std::isfinite(eta)) throw ContractViolation("regret_vs: eta must be finite");
  return ledger.cumulative_loss() - ledger.comparator_loss(eta);
}

namespace {

void require_steps(const RegretLedger& ledger) {
  if (!ledger.keeps_steps()) {
    throw ContractViolation("regret bound requires a ledger with per-step records");
  }
}

}  // namespace

double regret_bound_sum_term(const RegretLedger& ledger) {
  require_steps(ledger);
  const double M = ledger.M();
  const double kappa = curvature_factor(ledger.curvature());
  double running_sq = 0.0;
  double acc = 0.0;
  for (const auto& step : ledger.steps()) {
    running_sq += step.sq;
    const SurrogateLoss loss(M, step.inner, step.sq, ledger.curvature());
    const double d = loss.derivative(step.eta);
    acc += d * d / (2.0 * M * (ledger.alpha() + kappa * running_sq));
  }
  return acc;
}

double regret_bound_rhs(const RegretLedger& ledger, double eta) {
  const double M = ledger.M();
  if (!(eta >= 0.0 && eta <= 2.0 / M)) {
    throw ContractViolation("regret_bound_rhs: eta outside [0, 2/M]");
  }
  const double offset = eta - 1.0 / M;
  return 0.5 * M * ledger.alpha() * offset * offset + regret_bound_sum_term(ledger);
}

double regret_sum_term_worst_case(const RegretLedger& ledger, double L) {
  const double kappa = curvature_factor(ledger.curvature());
  const double L2 = L * L;
  const double T = static_cast<double>(ledger.rounds());
  return (1.0 + 4.0 * kappa * kappa) * L2 / (kappa * ledger.M()) *
         std::log1p(kappa * L2 * T / ledger.alpha());
}

}  // namespace sgdol
