#pragma once

#include "sgdol/core/vec.hpp"

namespace sgdol {

// Quadratic coefficient convention of the surrogate loss
//   ℓ(η) = (κ M / 2) η² ‖g‖² − η ⟨g, g'⟩.
// kStandard (κ = 1) is the single-stepsize loss; kDoubled (κ = 2) is the
// M η² ‖g‖² form used by the two-stepsize momentum learner.
enum class Curvature { kStandard, kDoubled };

constexpr double curvature_factor(Curvature c) { return c == Curvature::kStandard ? 1.0 : 2.0; }

// A single round's surrogate loss, reduced to its sufficient statistics.
class SurrogateLoss {
public:
  SurrogateLoss(double M, const Vec& g, const Vec& g_prime,
                Curvature curvature = Curvature::kStandard);
  SurrogateLoss(double M, double inner, double sq, Curvature curvature = Curvature::kStandard);

  double M() const noexcept { return M_; }
  Curvature curvature() const noexcept { return curvature_; }
  double inner() const noexcept { return inner_; }  // ⟨g, g'⟩
  double sq() const noexcept { return sq_; }        // ‖g‖²

  double value(double eta) const;
  double derivative(double eta) const;
  // ⟨g,g'⟩ / (κ M ‖g‖²); undefined (NaN) when g = 0.
  double unconstrained_minimizer() const;

private:
  double M_;
  Curvature curvature_;
  double inner_;
  double sq_;
};

double eval_surrogate(const SurrogateLoss& loss, double eta);

// Σ_i [(κM/2) η_i² g_i² − η_i g_i g'_i]
double eval_surrogate_percoord(double M, const Vec& g, const Vec& g_prime, const Vec& eta,
                               Curvature curvature = Curvature::kStandard);

}  // namespace sgdol
