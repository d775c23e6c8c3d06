#include "sgdol/online/surrogate.hpp"

#include <limits>

#include "sgdol/core/error.hpp"

namespace sgdol {

SurrogateLoss::SurrogateLoss(double M, const Vec& g, const Vec& g_prime, Curvature curvature)
    : SurrogateLoss(M, dot(g, g_prime), sq_norm(g), curvature) {}

SurrogateLoss::SurrogateLoss(double M, double inner, double sq, Curvature curvature)
    : M_(M), curvature_(curvature), inner_(inner), sq_(sq) {
  if (!(M > 0.0)) throw ContractViolation("SurrogateLoss: M must be > 0");
}

double SurrogateLoss::value(double eta) const {
  return 0.5 * curvature_factor(curvature_) * M_ * eta * eta * sq_ - eta * inner_;
}

double SurrogateLoss::derivative(double eta) const {
  return curvature_factor(curvature_) * M_ * eta * sq_ - inner_;
}

double SurrogateLoss::unconstrained_minimizer() const {
  if (sq_ == 0.0) return std::numeric_limits<double>::quiet_NaN();
  return inner_ / (curvature_factor(curvature_) * M_ * sq_);
}

double eval_surrogate(const SurrogateLoss& loss, double eta) { return loss.value(eta); }

double eval_surrogate_percoord(double M, const Vec& g, const Vec& g_prime, const Vec& eta,
                               Curvature curvature) {
  if (g.dim() != g_prime.dim() || g.dim() != eta.dim()) {
    throw ContractViolation("eval_surrogate_percoord: dimension mismatch");
  }
  const double half_kM = 0.5 * curvature_factor(curvature) * M;
  double acc = 0.0;
  for (std::size_t i = 0; i < g.dim(); ++i) {
    acc += half_kM * eta[i] * eta[i] * g[i] * g[i] - eta[i] * g[i] * g_prime[i];
  }
  return acc;
}

}  // namespace sgdol
