#include "sgdol/oracles/quadratic.hpp"

#include <algorithm>

#include "sgdol/core/error.hpp"

namespace sgdol {

QuadraticOracle::QuadraticOracle(Vec diagonal, Vec noise, Vec start)
    : diag_(std::move(diagonal)), noise_(std::move(noise)), start_(std::move(start)) {
  if (diag_.empty()) throw ContractViolation("QuadraticOracle: empty diagonal");
  if (noise_.dim() != diag_.dim() || start_.dim() != diag_.dim()) {
    throw ContractViolation("QuadraticOracle: diagonal, noise and start must share a dimension");
  }
  for (std::size_t i = 0; i < diag_.dim(); ++i) {
    if (!(diag_[i] > 0.0)) throw ContractViolation("QuadraticOracle: diagonal must be positive");
    if (!(noise_[i] >= 0.0)) throw ContractViolation("QuadraticOracle: noise must be >= 0");
  }
}

double QuadraticOracle::f(const Vec& x) const {
  require_dim(x);
  double acc = 0.0;
  for (std::size_t i = 0; i < x.dim(); ++i) acc += diag_[i] * x[i] * x[i];
  return 0.5 * acc;
}

Vec QuadraticOracle::grad(const Vec& x) const {
  require_dim(x);
  Vec out(x.dim());
  for (std::size_t i = 0; i < x.dim(); ++i) out[i] = diag_[i] * x[i];
  return out;
}

GradientPair QuadraticOracle::sample_pair(const Vec& x, RngStream& rng) const {
  const Vec exact = grad(x);
  GradientPair pair{exact, exact};
  for (Vec* g : {&pair.g, &pair.g_prime}) {
    for (std::size_t i = 0; i < x.dim(); ++i) {
      if (noise_[i] > 0.0) (*g)[i] += noise_[i] * rng.normal();
    }
  }
  return pair;
}

std::optional<double> QuadraticOracle::smoothness() const {
  return *std::max_element(diag_.begin(), diag_.end());
}

std::optional<double> QuadraticOracle::pl_constant() const {
  return *std::min_element(diag_.begin(), diag_.end());
}

}  // namespace sgdol
