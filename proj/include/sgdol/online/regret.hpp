#pragma once

#include <cstddef>
#include <vector>

#include "sgdol/online/surrogate.hpp"

namespace sgdol {

// Bookkeeping for Regret_T(η) = Σ_t (ℓ_t(η_t) − ℓ_t(η)). The comparator sum
// of quadratic losses only needs (Σ⟨g,g'⟩, Σ‖g‖²); per-step records are kept
// when requested and are required for the FTRL regret bound.
class RegretLedger {
public:
  struct Step {
    double inner;
    double sq;
    double eta;
  };

  RegretLedger(double alpha, double M, Curvature curvature = Curvature::kStandard,
               bool keep_steps = false);

  double alpha() const noexcept { return alpha_; }
  double M() const noexcept { return M_; }
  Curvature curvature() const noexcept { return curvature_; }
  bool keeps_steps() const noexcept { return keep_steps_; }

  std::size_t rounds() const noexcept { return rounds_; }
  double cumulative_loss() const noexcept { return cumulative_loss_; }
  double sum_inner() const noexcept { return sum_inner_; }
  double sum_sq() const noexcept { return sum_sq_; }
  const std::vector<Step>& steps() const noexcept { return steps_; }

  // Adds ℓ_t(eta_played); returns that value.
  double record(const SurrogateLoss& loss, double eta_played);

  // Σ_t ℓ_t(η) from the sufficient statistics.
  double comparator_loss(double eta) const;

  // The η in [0, 2/M] minimizing Σ_t ℓ_t(η).
  double best_fixed_stepsize() const;

private:
  double alpha_;
  double M_;
  Curvature curvature_;
  bool keep_steps_;
  std::size_t rounds_ = 0;
  double cumulative_loss_ = 0.0;
  double sum_inner_ = 0.0;
  double sum_sq_ = 0.0;
  std::vector<Step> steps_;
};

double regret_vs(const RegretLedger& ledger, double eta);

// FTRL regret bound evaluated on the recorded run:
//   (Mα/2)(η − 1/M)² + Σ_t ℓ'_t(η_t)² / (2M(α + κ Σ_{s≤t} ‖g_s‖²)).
// Requires per-step records and η ∈ [0, 2/M].
double regret_bound_rhs(const RegretLedger& ledger, double eta);

// The summed second term of the bound above.
double regret_bound_sum_term(const RegretLedger& ledger);

// Worst-case form of the summed term when ‖g_t‖, ‖g'_t‖ ≤ L:
//   ((1 + 4κ²) L² / (κ M)) ln(1 + κ L² T / α),
// which for κ = 1 is (5L²/M) ln(1 + L²T/α).
double regret_sum_term_worst_case(const RegretLedger& ledger, double L);

}  // namespace sgdol
