#include "sgdol/oracles/rosenbrock.hpp"

#include <string>

#include "sgdol/core/error.hpp"

namespace sgdol {

double StochasticOracle::f(const Vec&) const {
  throw ContractViolation("oracle does not expose an exact objective value");
}

Vec StochasticOracle::grad(const Vec&) const {
  throw ContractViolation("oracle does not expose an exact gradient");
}

void StochasticOracle::require_dim(const Vec& x) const {
  if (x.dim() != dim()) {
    throw ContractViolation("oracle: query point has dim " + std::to_string(x.dim()) +
                            ", expected " + std::to_string(dim()));
  }
}

namespace {

void require_2d(const Vec& x) {
  if (x.dim() != 2) throw ContractViolation("rosenbrock: expects a 2-dimensional point");
}

}  // namespace

double rosenbrock_f(const Vec& x) {
  require_2d(x);
  const double a = 1.0 - x[0];
  const double b = x[1] - x[0] * x[0];
  return a * a + 100.0 * b * b;
}

Vec rosenbrock_grad(const Vec& x) {
  require_2d(x);
  const double b = x[1] - x[0] * x[0];
  return Vec{-2.0 * (1.0 - x[0]) - 400.0 * x[0] * b, 200.0 * b};
}

RosenbrockOracle::RosenbrockOracle(double sigma) : sigma_(sigma) {
  if (!(sigma >= 0.0)) throw ContractViolation("RosenbrockOracle: sigma must be >= 0");
}

GradientPair RosenbrockOracle::sample_pair(const Vec& x, RngStream& rng) const {
  require_dim(x);
  const Vec exact = rosenbrock_grad(x);
  GradientPair pair{exact, exact};
  if (sigma_ > 0.0) {
    axpy(1.0, gaussian(rng, 2, sigma_), pair.g);
    axpy(1.0, gaussian(rng, 2, sigma_), pair.g_prime);
  }
  return pair;
}

}  // namespace sgdol
