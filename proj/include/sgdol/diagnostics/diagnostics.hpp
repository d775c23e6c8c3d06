#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "sgdol/core/rng.hpp"
#include "sgdol/core/vec.hpp"
#include "sgdol/online/surrogate.hpp"
#include "sgdol/oracles/oracle.hpp"
#include "sgdol/oracles/quadratic.hpp"

namespace sgdol::diagnostics {

// r(η) + Σ_j ℓ_j(η), each loss evaluated directly from the stored vectors.
double ftrl_objective(double alpha, double M, std::span<const GradientPair> history, double eta,
                      Curvature curvature = Curvature::kStandard);

// Minimizer of ftrl_objective over [0, 2/M] by golden-section search down to
// an interval of width 1e-10; the endpoints are compared explicitly.
double ftrl_argmin_oracle(double alpha, double M, std::span<const GradientPair> history,
                          Curvature curvature = Curvature::kStandard);

// Central differences, one coordinate at a time.
Vec finite_diff_grad(const std::function<double(const Vec&)>& f, const Vec& x, double h);

struct DescentBoundVerdict {
  double mean_decrease = 0.0;   // mean of f(x − ηg) − f(x)
  double mean_surrogate = 0.0;  // mean of ℓ(η)
  double standard_error = 0.0;  // of the paired difference
  std::size_t samples = 0;
  bool passed = false;
};

// Monte Carlo check of E[f(x − ηg) − f(x)] ≤ E[ℓ(η)] at a fixed point with a
// stepsize chosen before sampling. Passes iff the mean decrease is at most
// the mean surrogate plus three standard errors. M defaults to the oracle's
// smoothness metadata.
DescentBoundVerdict descent_bound_check(const StochasticOracle& oracle, const Vec& x, double eta,
                               std::size_t samples, RngStream& rng,
                               std::optional<double> M = std::nullopt);

// max ‖∇f(x₁) − ∇f(x₂)‖ / ‖x₁ − x₂‖ over `pairs` independent draws of both
// points from the sampler: an empirical lower bound on the smoothness
// constant over the sampled region.
double smoothness_probe(const std::function<Vec(const Vec&)>& grad,
                        const std::function<Vec(RngStream&)>& sampler, std::size_t pairs,
                        RngStream& rng);

struct PlRateVerdict {
  bool rate_ok = true;      // f(x_{T+1}) − f* ≤ (1 − μ/M)^T (f(x₁) − f*) for all T
  bool decrease_ok = true;  // f(x_t) − f(x_{t+1}) ≥ ‖∇f(x_t)‖²/(2M) for all t
  std::size_t first_rate_failure = 0;
  std::size_t first_decrease_failure = 0;
  double final_gap = 0.0;
};

// Runs global SGDOL on a noiseless quadratic for T rounds and checks the
// linear rate and the per-step sufficient decrease, with M and μ taken from
// the oracle metadata.
PlRateVerdict pl_rate_check(const QuadraticOracle& oracle, double alpha, std::size_t T);

// `rounds` gradient pairs of dimension dim with entries uniform in [−1, 1].
std::vector<GradientPair> random_history(RngStream& rng, std::size_t rounds, std::size_t dim);

struct VerifyOptions {
  std::uint64_t seed = 20190613;
  std::size_t descent_samples = 20000;
};

// Self-check used by `sgdol verify`; prints one PASS/FAIL line per check and
// returns true if all pass.
bool run_verify_suite(std::ostream& out, const VerifyOptions& options = {});

}  // namespace sgdol::diagnostics
