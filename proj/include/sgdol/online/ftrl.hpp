#pragma once

#include <cstddef>
#include <vector>

#include "sgdol/core/vec.hpp"
#include "sgdol/online/surrogate.hpp"

namespace sgdol {

// Default regularization strength for the stepsize learner.
inline constexpr double kDefaultAlpha = 10.0;

// FTRL over η ∈ [0, 2/M] with regularizer r(η) = (Mα/2)(η − 1/M)² on the
// surrogate losses. The minimizer has a closed form in two running sums, so
// those sums are the whole state.
class FtrlState {
public:
  FtrlState(double alpha, double M, Curvature curvature = Curvature::kStandard);

  double alpha() const noexcept { return alpha_; }
  double M() const noexcept { return M_; }
  Curvature curvature() const noexcept { return curvature_; }
  double sum_inner() const noexcept { return sum_inner_; }
  double sum_sq() const noexcept { return sum_sq_; }
  // Round index of the next play, starting at 1.
  std::size_t t() const noexcept { return t_; }

  // clamp((α + Σ⟨g,g'⟩) / (M (α + κ Σ‖g‖²)), 0, 2/M)
  double stepsize() const;

  void observe(const SurrogateLoss& loss);
  void observe(double inner, double sq);

  friend bool operator==(const FtrlState&, const FtrlState&) = default;

private:
  double alpha_;
  double M_;
  Curvature curvature_;
  double sum_inner_ = 0.0;
  double sum_sq_ = 0.0;
  std::size_t t_ = 1;
};

double ftrl_stepsize(const FtrlState& state);
FtrlState ftrl_observe(FtrlState state, const SurrogateLoss& loss);

// Closed-form clipped stepsize from raw sums; shared by the global and
// per-coordinate learners.
double clipped_ftrl_stepsize(double alpha, double M, double curvature, double sum_inner,
                             double sum_sq);

// One independent scalar learner per coordinate, sharing α and M.
class CoordFtrlState {
public:
  CoordFtrlState(std::size_t dim, double alpha, double M,
                 Curvature curvature = Curvature::kStandard);

  std::size_t dim() const noexcept { return sum_inner_.size(); }
  double alpha() const noexcept { return alpha_; }
  double M() const noexcept { return M_; }
  Curvature curvature() const noexcept { return curvature_; }
  std::size_t t() const noexcept { return t_; }
  const std::vector<double>& sum_inner() const noexcept { return sum_inner_; }
  const std::vector<double>& sum_sq() const noexcept { return sum_sq_; }

  double stepsize(std::size_t i) const;
  Vec stepsizes() const;

  void observe(const Vec& g, const Vec& g_prime);

  friend bool operator==(const CoordFtrlState&, const CoordFtrlState&) = default;

private:
  double alpha_;
  double M_;
  Curvature curvature_;
  std::vector<double> sum_inner_;
  std::vector<double> sum_sq_;
  std::size_t t_ = 1;
};

Vec coord_ftrl_stepsize(const CoordFtrlState& state);

}  // namespace sgdol
