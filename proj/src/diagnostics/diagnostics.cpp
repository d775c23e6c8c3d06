#include "sgdol/diagnostics/diagnostics.hpp"

#include <algorithm>
#include <cmath>

#include "sgdol/core/error.hpp"
#include "sgdol/optimizers/sgdol.hpp"

namespace sgdol::diagnostics {
namespace {

// Plain loops, independent of the kernel layer.
double naive_dot(const Vec& a, const Vec& b) {
  double acc = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) acc += a[i] * b[i];
  return acc;
}

// Extended precision: the objective is flat near its minimizer, so double
// rounding alone would limit the search to about sqrt(eps) in η.
long double objective_ld(double alpha, double M, std::span<const GradientPair> history,
                         long double eta, Curvature curvature) {
  const long double kappa = curvature_factor(curvature);
  const long double offset = eta - 1.0L / M;
  long double value = 0.5L * M * alpha * offset * offset;
  for (const auto& pair : history) {
    long double sq = 0.0L, inner = 0.0L;
    for (std::size_t i = 0; i < pair.g.dim(); ++i) {
      sq += static_cast<long double>(pair.g[i]) * pair.g[i];
      inner += static_cast<long double>(pair.g[i]) * pair.g_prime[i];
    }
    value += 0.5L * kappa * M * eta * eta * sq - eta * inner;
  }
  return value;
}

}  // namespace

double ftrl_objective(double alpha, double M, std::span<const GradientPair> history, double eta,
                      Curvature curvature) {
  return static_cast<double>(objective_ld(alpha, M, history, eta, curvature));
}

double ftrl_argmin_oracle(double alpha, double M, std::span<const GradientPair> history,
                          Curvature curvature) {
  if (!(alpha > 0.0) || !(M > 0.0)) throw ContractViolation("ftrl_argmin_oracle: alpha, M > 0");
  auto objective = [&](long double eta) {
    return objective_ld(alpha, M, history, eta, curvature);
  };

  const long double inv_phi = (std::sqrt(5.0L) - 1.0L) / 2.0L;
  long double lo = 0.0L, hi = 2.0L / M;
  long double a = hi - inv_phi * (hi - lo);
  long double b = lo + inv_phi * (hi - lo);
  long double fa = objective(a), fb = objective(b);
  while (hi - lo > 1e-10L) {
    if (fa <= fb) {
      hi = b;
      b = a;
      fb = fa;
      a = hi - inv_phi * (hi - lo);
      fa = objective(a);
    } else {
      lo = a;
      a = b;
      fa = fb;
      b = lo + inv_phi * (hi - lo);
      fb = objective(b);
    }
  }
  long double best = 0.5L * (lo + hi);
  long double best_value = objective(best);
  for (long double endpoint : {0.0L, 2.0L / M}) {
    const long double v = objective(endpoint);
    if (v <= best_value) {
      best = endpoint;
      best_value = v;
    }
  }
  return static_cast<double>(best);
}

Vec finite_diff_grad(const std::function<double(const Vec&)>& f, const Vec& x, double h) {
  if (!(h > 0.0)) throw ContractViolation("finite_diff_grad: h must be > 0");
  Vec out(x.dim());
  Vec probe = x;
  for (std::size_t i = 0; i < x.dim(); ++i) {
    probe[i] = x[i] + h;
    const double up = f(probe);
    probe[i] = x[i] - h;
    const double down = f(probe);
    probe[i] = x[i];
    out[i] = (up - down) / (2.0 * h);
  }
  return out;
}

DescentBoundVerdict descent_bound_check(const StochasticOracle& oracle, const Vec& x, double eta,
                               std::size_t samples, RngStream& rng, std::optional<double> M) {
  if (!oracle.has_exact_f()) {
    throw ContractViolation("descent_bound_check: oracle must expose the exact objective");
  }
  if (samples == 0) throw ContractViolation("descent_bound_check: need at least one sample");
  const double smooth = M ? *M : oracle.smoothness().value_or(0.0);
  if (!(smooth > 0.0)) throw ContractViolation("descent_bound_check: no smoothness constant");

  const double f0 = oracle.f(x);
  // Welford on the paired difference: exact zero variance for constant input.
  double sum_dec = 0.0, sum_sur = 0.0, mean_diff = 0.0, m2 = 0.0;
  Vec moved = x;
  for (std::size_t n = 0; n < samples; ++n) {
    const GradientPair pair = oracle.sample_pair(x, rng);
    for (std::size_t i = 0; i < x.dim(); ++i) moved[i] = x[i] - eta * pair.g[i];
    const double decrease = oracle.f(moved) - f0;
    const double surrogate = 0.5 * smooth * eta * eta * naive_dot(pair.g, pair.g) -
                             eta * naive_dot(pair.g, pair.g_prime);
    const double diff = surrogate - decrease;
    sum_dec += decrease;
    sum_sur += surrogate;
    const double delta = diff - mean_diff;
    mean_diff += delta / static_cast<double>(n + 1);
    m2 += delta * (diff - mean_diff);
  }
  const double n = static_cast<double>(samples);
  DescentBoundVerdict v;
  v.samples = samples;
  v.mean_decrease = sum_dec / n;
  v.mean_surrogate = sum_sur / n;
  const double var = samples > 1 ? m2 / (n - 1) : 0.0;
  v.standard_error = std::sqrt(var / n);
  v.passed = v.mean_decrease <= v.mean_surrogate + 3.0 * v.standard_error;
  return v;
}

double smoothness_probe(const std::function<Vec(const Vec&)>& grad,
                        const std::function<Vec(RngStream&)>& sampler, std::size_t pairs,
                        RngStream& rng) {
  if (pairs == 0) throw ContractViolation("smoothness_probe: pairs must be >= 1");
  double best = 0.0;
  for (std::size_t k = 0; k < pairs; ++k) {
    const Vec a = sampler(rng);
    const Vec b = sampler(rng);
    const double dx = norm(a - b);
    if (dx == 0.0) continue;
    best = std::max(best, norm(grad(a) - grad(b)) / dx);
  }
  return best;
}

PlRateVerdict pl_rate_check(const QuadraticOracle& oracle, double alpha, std::size_t T) {
  const double M = *oracle.smoothness();
  const double mu = *oracle.pl_constant();
  const double f_star = *oracle.f_star();
  SgdolGlobal opt(oracle.initial_point(), M, alpha);
  RngStream rng(0, 0);  // unused by a noiseless oracle

  PlRateVerdict v;
  const double gap1 = oracle.f(opt.x()) - f_star;
  double factor = 1.0;
  for (std::size_t t = 1; t <= T; ++t) {
    const double f_before = oracle.f(opt.x());
    const double grad_sq = sq_norm(oracle.grad(opt.x()));
    opt.step(oracle.sample_pair(opt.x(), rng));
    const double f_after = oracle.f(opt.x());
    factor *= 1.0 - mu / M;
    if (v.rate_ok && !(f_after - f_star <= factor * gap1)) {
      v.rate_ok = false;
      v.first_rate_failure = t;
    }
    if (v.decrease_ok && !(f_before - f_after >= grad_sq / (2.0 * M))) {
      v.decrease_ok = false;
      v.first_decrease_failure = t;
    }
    v.final_gap = f_after - f_star;
  }
  return v;
}

}  // namespace sgdol::diagnostics
