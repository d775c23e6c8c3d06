#pragma once

#include <cstddef>
#include <optional>

#include "sgdol/core/rng.hpp"
#include "sgdol/core/vec.hpp"

namespace sgdol {

// Two stochastic gradients drawn at the same point from disjoint randomness.
struct GradientPair {
  Vec g;
  Vec g_prime;
};

// First-order stochastic black box. sample_pair must return two conditionally
// independent, unbiased estimates of ∇f(x); the query point is never mutated.
// Exact f / ∇f are optional and used only for reporting and diagnostics.
class StochasticOracle {
public:
  virtual ~StochasticOracle() = default;

  virtual std::size_t dim() const = 0;
  virtual GradientPair sample_pair(const Vec& x, RngStream& rng) const = 0;

  virtual bool has_exact_f() const { return false; }
  virtual bool has_exact_grad() const { return false; }
  virtual double f(const Vec& x) const;
  virtual Vec grad(const Vec& x) const;

  // Metadata; never consumed by the optimizers themselves.
  virtual std::optional<double> f_star() const { return std::nullopt; }
  virtual std::optional<double> smoothness() const { return std::nullopt; }
  virtual std::optional<double> pl_constant() const { return std::nullopt; }

  virtual Vec initial_point() const { return Vec(dim()); }

protected:
  void require_dim(const Vec& x) const;
};

}  // namespace sgdol
