#pragma once

#include "sgdol/oracles/oracle.hpp"

namespace sgdol {

// f(x, y) = (1 - x)^2 + 100 (y - x^2)^2
double rosenbrock_f(const Vec& x);
Vec rosenbrock_grad(const Vec& x);

// Curvature of the Rosenbrock valley at its minimum (1, 1), rounded as used
// for the smoothness parameter in the noisy benchmark.
inline constexpr double kRosenbrockSmoothness = 1002.0;

// Exact gradient plus independent N(0, sigma^2 I) noise on each member of the
// pair. Starts from the origin.
class RosenbrockOracle final : public StochasticOracle {
public:
  explicit RosenbrockOracle(double sigma);

  double sigma() const noexcept { return sigma_; }

  std::size_t dim() const override { return 2; }
  GradientPair sample_pair(const Vec& x, RngStream& rng) const override;

  bool has_exact_f() const override { return true; }
  bool has_exact_grad() const override { return true; }
  double f(const Vec& x) const override { return rosenbrock_f(x); }
  Vec grad(const Vec& x) const override { return rosenbrock_grad(x); }

  std::optional<double> f_star() const override { return 0.0; }
  std::optional<double> smoothness() const override { return kRosenbrockSmoothness; }

private:
  double sigma_;
};

}  // namespace sgdol
