#pragma once

#include "sgdol/oracles/oracle.hpp"

namespace sgdol {

// f(x) = ½ Σ a_i x_i², a_i > 0, with independent per-coordinate Gaussian
// noise (standard deviation noise_i) on each gradient of the pair.
// Smoothness is max a_i, the PL constant min a_i, f* = 0.
class QuadraticOracle final : public StochasticOracle {
public:
  QuadraticOracle(Vec diagonal, Vec noise, Vec start);

  const Vec& diagonal() const noexcept { return diag_; }
  const Vec& noise() const noexcept { return noise_; }

  std::size_t dim() const override { return diag_.dim(); }
  GradientPair sample_pair(const Vec& x, RngStream& rng) const override;

  bool has_exact_f() const override { return true; }
  bool has_exact_grad() const override { return true; }
  double f(const Vec& x) const override;
  Vec grad(const Vec& x) const override;

  std::optional<double> f_star() const override { return 0.0; }
  std::optional<double> smoothness() const override;
  std::optional<double> pl_constant() const override;

  Vec initial_point() const override { return start_; }

private:
  Vec diag_;
  Vec noise_;
  Vec start_;
};

}  // namespace sgdol
