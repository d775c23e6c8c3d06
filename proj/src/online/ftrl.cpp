#include "sgdol/online/ftrl.hpp"

#include <algorithm>

#include "sgdol/core/error.hpp"

namespace sgdol {
namespace {

void validate(double alpha, double M) {
  if (!(alpha > 0.0)) throw ContractViolation("FTRL: alpha must be > 0");
  if (!(M > 0.0)) throw ContractViolation("FTRL: M must be > 0");
}

}  // namespace

double clipped_ftrl_stepsize(double alpha, double M, double curvature, double sum_inner,
                             double sum_sq) {
  // The ratio is formed before dividing by M so that equal sums give exactly 1/M.
  const double ratio = (alpha + sum_inner) / (alpha + curvature * sum_sq);
  const double raw = ratio / M;
  return std::max(0.0, std::min(raw, 2.0 / M));
}

FtrlState::FtrlState(double alpha, double M, Curvature curvature)
    : alpha_(alpha), M_(M), curvature_(curvature) {
  validate(alpha, M);
}

double FtrlState::stepsize() const {
  return clipped_ftrl_stepsize(alpha_, M_, curvature_factor(curvature_), sum_inner_, sum_sq_);
}

void FtrlState::observe(const SurrogateLoss& loss) {
  if (loss.M() != M_ || loss.curvature() != curvature_) {
    throw ContractViolation("FtrlState::observe: loss built for a different M or curvature");
  }
  observe(loss.inner(), loss.sq());
}

void FtrlState::observe(double inner, double sq) {
  sum_inner_ += inner;
  sum_sq_ += sq;
  ++t_;
}

double ftrl_stepsize(const FtrlState& state) { return state.stepsize(); }

FtrlState ftrl_observe(FtrlState state, const SurrogateLoss& loss) {
  state.observe(loss);
  return state;
}

CoordFtrlState::CoordFtrlState(std::size_t dim, double alpha, double M, Curvature curvature)
    : alpha_(alpha), M_(M), curvature_(curvature), sum_inner_(dim, 0.0), sum_sq_(dim, 0.0) {
  validate(alpha, M);
}

double CoordFtrlState::stepsize(std::size_t i) const {
  return clipped_ftrl_stepsize(alpha_, M_, curvature_factor(curvature_), sum_inner_[i],
                               sum_sq_[i]);
}

Vec CoordFtrlState::stepsizes() const {
  Vec out(dim());
  for (std::size_t i = 0; i < dim(); ++i) out[i] = stepsize(i);
  return out;
}

void CoordFtrlState::observe(const Vec& g, const Vec& g_prime) {
  if (g.dim() != dim() || g_prime.dim() != dim()) {
    throw ContractViolation("CoordFtrlState::observe: dimension mismatch");
  }
  for (std::size_t i = 0; i < dim(); ++i) {
    sum_inner_[i] += g[i] * g_prime[i];
    sum_sq_[i] += g[i] * g[i];
  }
  ++t_;
}

Vec coord_ftrl_stepsize(const CoordFtrlState& state) { return state.stepsizes(); }

}  // namespace sgdol
