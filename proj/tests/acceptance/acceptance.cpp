// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Runtimes are measured and count against each criterion's budget.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "sgdol/core/error.hpp"
#include "sgdol/diagnostics/diagnostics.hpp"
#include "sgdol/harness/experiment.hpp"
#include "sgdol/kernels/kernels.hpp"
#include "sgdol/online/ftrl.hpp"
#include "sgdol/online/regret.hpp"
#include "sgdol/oracles/dataset.hpp"
#include "sgdol/oracles/quadratic.hpp"
#include "sgdol/oracles/rosenbrock.hpp"
#include "sgdol/oracles/sigmoid_loss.hpp"
#include "sgdol/optimizers/baselines.hpp"
#include "sgdol/optimizers/run.hpp"
#include "sgdol/optimizers/sgdol.hpp"

using namespace sgdol;

namespace {

constexpr std::uint64_t kSeed = 20190613;
constexpr double kRosenbrockM = 1002.0;

struct Outcome {
  bool passed = false;
  std::string detail;
};

std::string fmt(double v) {
  std::ostringstream s;
  s.precision(4);
  s << v;
  return s.str();
}

// Regret-bound checks on every ledger produced by the other criteria.
struct RegretAudit {
  std::size_t ledgers = 0;
  std::size_t grid_checks = 0;
  std::size_t failures = 0;
  double worst_margin = INFINITY;  // min over checks of rhs − regret
  std::string first_failure;

  // L: max observed norm of the vectors the ledger's losses were built from,
  // or nullopt when that was not tracked.
  void audit(const RegretLedger& ledger, const std::string& label, std::optional<double> L) {
    ++ledgers;
    const double M = ledger.M();
    const double sum_term = regret_bound_sum_term(ledger);
    for (int k = 0; k < 32; ++k) {
      const double eta = (2.0 / M) * k / 31.0;
      const double regret = regret_vs(ledger, eta);
      const double rhs = regret_bound_rhs(ledger, eta);
      ++grid_checks;
      worst_margin = std::min(worst_margin, rhs - regret);
      if (!(regret <= rhs)) fail(label + " at eta=" + fmt(eta));
    }
    if (L) {
      ++grid_checks;
      if (!(sum_term <= regret_sum_term_worst_case(ledger, *L))) fail(label + " worst-case term");
    }
  }

  void fail(const std::string& what) {
    if (failures++ == 0) first_failure = what;
  }
};

RegretAudit g_audit;

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

double max_pair_norm(const GradientPair& p) { return std::max(norm(p.g), norm(p.g_prime)); }

// ---------------------------------------------------------------------------

Outcome criterion_ftrl_closed_form() {
  RngStream rng(kSeed, 1);
  double worst = 0.0;
  for (int k = 0; k < 200; ++k) {
    const double alpha = std::vector{0.1, 1.0, 10.0}[rng.uniform_index(3)];
    const double M = std::vector{0.5, 1.0, 2.0, 1002.0}[rng.uniform_index(4)];
    const auto history =
        diagnostics::random_history(rng, 1 + rng.uniform_index(50), 1 + rng.uniform_index(8));
    FtrlState state(alpha, M);
    for (const auto& p : history) state.observe(SurrogateLoss(M, p.g, p.g_prime));
    const double oracle = diagnostics::ftrl_argmin_oracle(alpha, M, history);
    worst = std::max(worst, std::abs(ftrl_stepsize(state) - oracle));
  }
  return {worst <= 1e-8, "max |closed form - oracle| = " + fmt(worst) + " over 200 histories"};
}

Outcome criterion_noiseless_recovery() {
  const RosenbrockOracle oracle(0.0);
  const std::size_t T = 10000;
  SgdolGlobal sgdol(oracle.initial_point(), kRosenbrockM, 10.0, Curvature::kStandard, true);
  Sgd sgd(oracle.initial_point(), 1.0 / kRosenbrockM);
  RngStream ra = oracle_stream(kSeed, 0), rb = oracle_stream(kSeed, 0);
  bool identical = true, exact_eta = true;
  double L = 0.0;
  for (std::size_t t = 0; t < T; ++t) {
    const auto pa = oracle.sample_pair(sgdol.x(), ra);
    const auto report = sgdol.step(pa);
    sgd.step(oracle.sample_pair(sgd.x(), rb));
    L = std::max(L, max_pair_norm(pa));
    exact_eta = exact_eta && report.eta_used[0] == 1.0 / kRosenbrockM;
    identical = identical && sgdol.x() == sgd.x();
  }
  g_audit.audit(*sgdol.ledger(), "noiseless rosenbrock", L);
  return {identical && exact_eta, std::string("trajectories ") +
                                      (identical ? "bitwise identical" : "DIFFER") +
                                      ", stepsize " + (exact_eta ? "== 1/1002 throughout" : "drifted") +
                                      ", f(x_T+1) = " + fmt(rosenbrock_f(sgdol.x()))};
}

// Shared by the noise-adaptivity and convergence criteria.
struct RosenbrockSweep {
  std::vector<double> mean_eta;        // per iteration, averaged over reps
  std::vector<double> sgdol_grad_sq;   // per iteration, averaged over reps
  std::vector<double> sgd_grad_sq;
  bool diverged = false;
};

RosenbrockSweep rosenbrock_sweep(double sigma, std::size_t T, std::size_t reps) {
  const RosenbrockOracle oracle(sigma);
  RosenbrockSweep out;
  out.mean_eta.assign(T, 0.0);
  out.sgdol_grad_sq.assign(T, 0.0);
  out.sgd_grad_sq.assign(T, 0.0);
  const double w = 1.0 / static_cast<double>(reps);
  for (std::size_t rep = 0; rep < reps; ++rep) {
    SgdolGlobal sgdol(oracle.initial_point(), kRosenbrockM, 10.0, Curvature::kStandard, true);
    Sgd sgd(oracle.initial_point(), 1.0 / kRosenbrockM);
    RngStream ra = oracle_stream(kSeed + 3, rep), rb = oracle_stream(kSeed + 3, rep);
    double L = 0.0;
    try {
      for (std::size_t t = 0; t < T; ++t) {
        out.sgdol_grad_sq[t] += w * sq_norm(rosenbrock_grad(sgdol.x()));
        out.sgd_grad_sq[t] += w * sq_norm(rosenbrock_grad(sgd.x()));
        const auto pa = oracle.sample_pair(sgdol.x(), ra);
        L = std::max(L, max_pair_norm(pa));
        out.mean_eta[t] += w * sgdol.step(pa).eta_used[0];
        sgd.step(oracle.sample_pair(sgd.x(), rb));
      }
    } catch (const DivergenceError&) {
      out.diverged = true;
      return out;
    }
    g_audit.audit(*sgdol.ledger(), "rosenbrock sigma=" + fmt(sigma), L);
  }
  return out;
}

double window_mean(const std::vector<double>& v, std::size_t begin, std::size_t end) {
  double s = 0.0;
  for (std::size_t i = begin; i < end; ++i) s += v[i];
  return s / static_cast<double>(end - begin);
}

std::map<double, RosenbrockSweep>& sweeps() {
  static std::map<double, RosenbrockSweep> cache;
  return cache;
}

const RosenbrockSweep& sweep_for(double sigma) {
  auto& cache = sweeps();
  auto it = cache.find(sigma);
  if (it == cache.end()) it = cache.emplace(sigma, rosenbrock_sweep(sigma, 100000, 40)).first;
  return it->second;
}

Outcome criterion_noise_adaptivity() {
  const auto& low = sweep_for(0.2);
  const auto& high = sweep_for(5.0);
  if (low.diverged || high.diverged) return {false, "a run diverged"};
  const std::size_t T = high.mean_eta.size(), decile = T / 10;
  const double first = window_mean(high.mean_eta, 0, decile);
  const double last = window_mean(high.mean_eta, T - decile, T);
  const auto drop = [](const std::vector<double>& eta) {
    const double threshold = 0.5 / kRosenbrockM;
    for (std::size_t t = 0; t < eta.size(); ++t) {
      if (eta[t] < threshold) return t + 1;
    }
    return eta.size() + 1;  // never
  };
  const std::size_t drop_high = drop(high.mean_eta), drop_low = drop(low.mean_eta);
  const bool a = last * 5.0 <= first;
  const bool b = drop_high < drop_low;
  return {a && b, "sigma=5 first/last decile stepsize ratio " + fmt(first / last) +
                      " (need >= 5); first t below 0.5/M: sigma=5 at " +
                      std::to_string(drop_high) + ", sigma=0.2 at " + std::to_string(drop_low)};
}

Outcome criterion_convergence_vs_oscillation() {
  const auto& high = sweep_for(5.0);
  if (high.diverged) return {false, "a run diverged"};
  const std::size_t T = high.sgdol_grad_sq.size(), decile = T / 10;
  const double sgdol = window_mean(high.sgdol_grad_sq, T - decile, T);
  const double sgd = window_mean(high.sgd_grad_sq, T - decile, T);
  return {sgdol * 10.0 <= sgd, "final-decile mean |grad f|^2: SGDOL " + fmt(sgdol) + ", SGD " +
                                   fmt(sgd) + " (ratio " + fmt(sgd / sgdol) + ", need >= 10)"};
}

std::shared_ptr<const Dataset> fixture() {
  static const auto data = std::make_shared<const Dataset>(
      load_libsvm(std::filesystem::path(SGDOL_TEST_DATA_DIR) / "synthetic_a9a_500.libsvm"));
  return data;
}

Outcome criterion_descent_bound() {
  RngStream rng(kSeed, 5);
  std::size_t passed = 0, total = 0;
  std::string failures;
  const auto probe = [&](const StochasticOracle& oracle, const Vec& x, double eta,
                         std::size_t samples, const std::string& label) {
    const auto v = diagnostics::descent_bound_check(oracle, x, eta, samples, rng);
    ++total;
    if (v.passed) {
      ++passed;
    } else {
      failures += " " + label;
    }
  };

  // Points where the local smoothness of Rosenbrock stays under 1002.
  const std::vector<double> eta_scale{0.25, 0.5, 1.0, 1.5, 2.0};
  for (double sigma : {0.2, 5.0}) {
    const RosenbrockOracle oracle(sigma);
    for (std::size_t i = 0; i < 5; ++i) {
      const double x1 = -0.8 + 1.7 * rng.uniform();
      const double x2 = x1 * x1 + 0.4 * (rng.uniform() - 0.5);
      probe(oracle, Vec{x1, x2}, eta_scale[i] / kRosenbrockM, 20000,
            "rosenbrock(sigma=" + fmt(sigma) + ")#" + std::to_string(i));
    }
  }
  const auto data = fixture();
  for (std::size_t batch : {std::size_t{1}, std::size_t{50}}) {
    const SigmoidLossOracle oracle(data, batch);
    const double M = oracle.smoothness().value();
    for (std::size_t i = 0; i < 5; ++i) {
      Vec x = gaussian(rng, oracle.dim(), 0.3);
      probe(oracle, x, eta_scale[i] / M, 4000, "sigmoid(batch=" + std::to_string(batch) + ")#" +
                                                   std::to_string(i));
    }
  }
  return {passed == total && total == 20,
          std::to_string(passed) + "/" + std::to_string(total) + " probes within 3 SE" +
              (failures.empty() ? "" : "; failed:" + failures)};
}

Outcome criterion_pl_rate() {
  const QuadraticOracle oracle(Vec{0.1, 0.3, 0.5, 0.7, 1.0}, Vec(5), Vec{1, -2, 0.5, 1.5, -1});
  const auto v = diagnostics::pl_rate_check(oracle, 10.0, 200);
  std::string detail = "mu=" + fmt(oracle.pl_constant().value()) + ", M=" + fmt(oracle.smoothness().value()) +
                       ", T=200: rate " + (v.rate_ok ? "ok" : "violated") + ", decrease " +
                       (v.decrease_ok ? "ok" : "violated") + ", final gap " + fmt(v.final_gap);
  if (!v.rate_ok) detail += ", first rate failure t=" + std::to_string(v.first_rate_failure);
  return {v.rate_ok && v.decrease_ok, detail};
}

Outcome criterion_coordinate_adaptivity() {
  const double M = 1.0;
  const QuadraticOracle oracle(Vec{1.0, 1.0}, Vec{0.0, 1.0}, Vec{1.0, 1.0});
  const std::size_t T = 10000, reps = 20, decile = T / 10;
  bool exact = true;
  double tail = 0.0;
  for (std::size_t rep = 0; rep < reps; ++rep) {
    SgdolCoord opt(oracle.initial_point(), M, 10.0, Curvature::kStandard, true);
    RngStream rng = oracle_stream(kSeed + 7, rep);
    std::vector<double> L(2, 0.0);
    for (std::size_t t = 0; t < T; ++t) {
      const auto pair = oracle.sample_pair(opt.x(), rng);
      for (std::size_t i = 0; i < 2; ++i) {
        L[i] = std::max({L[i], std::abs(pair.g[i]), std::abs(pair.g_prime[i])});
      }
      const auto report = opt.step(pair);
      exact = exact && report.eta_used[0] == 1.0 / M;
      if (t >= T - decile) tail += report.eta_used[1];
    }
    const auto ledgers = opt.coordinate_ledgers();
    for (std::size_t i = 0; i < 2; ++i) {
      g_audit.audit(ledgers[i], "quadratic coord " + std::to_string(i + 1), L[i]);
    }
  }
  tail /= static_cast<double>(reps * decile);
  return {exact && tail < 0.5 / M,
          std::string("coordinate 1 stepsize ") + (exact ? "== 1/M at every step" : "DRIFTED") +
              "; coordinate 2 last-decile mean " + fmt(tail) + " (need < 0.5)"};
}

// M for the classification runs: reciprocal of the best constant SGD rate on
// the full-batch objective, from a geometric grid.
double classification_M(const SigmoidLossOracle& full, std::size_t T) {
  double best_lr = 0.0, best = INFINITY;
  for (int k = -2; k <= 10; ++k) {
    const double lr = std::ldexp(1.0 / full.smoothness().value(), k);
    Sgd sgd(full.initial_point(), lr);
    RngStream rng(kSeed, 9);
    double tail = 0.0;
    try {
      for (std::size_t t = 0; t < T; ++t) {
        sgd.step(full.sample_pair(sgd.x(), rng));
        if (t >= T - T / 10) tail += sq_norm(full.grad(sgd.x()));
      }
    } catch (const DivergenceError&) {
      continue;
    }
    if (tail < best) {
      best = tail;
      best_lr = lr;
    }
  }
  return 1.0 / best_lr;
}

struct ClassificationRun {
  std::vector<RunResult> sgdol, sgd;
  std::vector<std::vector<Vec>> sgdol_path, sgd_path;  // full batch only
};

Outcome criterion_classification() {
  std::string dataset_note = "500-row synthetic fixture";
  std::shared_ptr<const Dataset> data = fixture();
  bool counts_ok = true;
  if (const char* a9a = std::getenv("SGDOL_A9A"); a9a && std::filesystem::exists(a9a)) {
    RngStream rng(kSeed, static_cast<std::uint64_t>(StreamPurpose::kBalance));
    LibsvmOptions options;
    options.n_features = 123;
    data = std::make_shared<const Dataset>(balance_subsample(load_libsvm(a9a, options), rng));
    counts_ok = data->size() == 15682 && data->n_features() == 124;
    dataset_note = "a9a balanced: " + std::to_string(data->size()) + " rows, " +
                   std::to_string(data->n_features() - 1) + " features + bias";
  }

  const std::size_t T = 10000, reps = 5, every = default_report_every(T);
  const SigmoidLossOracle full_oracle(data, data->size());
  const double M = classification_M(full_oracle, T);

  bool full_identical = true, stepsizes_decrease = true;
  double batch1_sgdol = 0.0, batch1_sgd = 0.0;
  std::string eta_note;

  for (std::size_t batch : {data->size(), std::size_t{50}, std::size_t{1}}) {
    const SigmoidLossOracle oracle(data, batch);
    std::vector<double> sgdol_tail(1, 0.0), sgd_tail(1, 0.0);
    double eta_first = 0.0, eta_last = 0.0;
    for (std::size_t rep = 0; rep < reps; ++rep) {
      SgdolGlobal sgdol(oracle.initial_point(), M, 10.0, Curvature::kStandard, true);
      Sgd sgd(oracle.initial_point(), 1.0 / M);
      RngStream ra = oracle_stream(kSeed + 11, rep), rb = oracle_stream(kSeed + 11, rep);
      RngStream oa = output_stream(kSeed + 11, 0, rep), ob = output_stream(kSeed + 11, 1, rep);
      const RunResult a = run(sgdol, oracle, T, ra, oa, every);
      const RunResult b = run(sgd, oracle, T, rb, ob, every);
      g_audit.audit(*sgdol.ledger(), "sigmoid batch=" + std::to_string(batch), std::nullopt);

      if (batch == data->size()) {
        full_identical = full_identical && a.final_point == b.final_point;
        for (std::size_t i = 0; i < a.records.size(); ++i) {
          full_identical = full_identical &&
                           a.records[i].true_grad_sq_norm == b.records[i].true_grad_sq_norm &&
                           a.records[i].stepsize == b.records[i].stepsize;
        }
      }
      const std::size_t n = a.records.size(), decile = std::max<std::size_t>(1, n / 10);
      for (std::size_t i = n - decile; i < n; ++i) {
        sgdol_tail[0] += *a.records[i].true_grad_sq_norm / static_cast<double>(decile * reps);
        sgd_tail[0] += *b.records[i].true_grad_sq_norm / static_cast<double>(decile * reps);
        eta_last += a.records[i].stepsize[0] / static_cast<double>(decile * reps);
      }
      eta_first += a.records.front().stepsize[0] / static_cast<double>(reps);
    }
    if (batch != data->size()) {
      const bool decreasing = eta_first == 1.0 / M && eta_last < eta_first;
      stepsizes_decrease = stepsizes_decrease && decreasing;
      eta_note += " batch " + std::to_string(batch) + ": eta " + fmt(eta_first * M) + "/M -> " +
                  fmt(eta_last * M) + "/M;";
    }
    if (batch == 1) {
      batch1_sgdol = sgdol_tail[0];
      batch1_sgd = sgd_tail[0];
    }
  }
  const bool batch1_ok = batch1_sgdol < batch1_sgd;
  return {counts_ok && full_identical && batch1_ok && stepsizes_decrease,
          dataset_note + ", M=" + fmt(M) + "; full batch " +
              (full_identical ? "identical to SGD" : "DIFFERS from SGD") +
              "; batch 1 final-decile |grad f|^2 SGDOL " + fmt(batch1_sgdol) + " vs SGD " +
              fmt(batch1_sgd) + ";" + eta_note};
}

Outcome criterion_momentum_degeneracy() {
  bool identical = true;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const RosenbrockOracle oracle(1.0 + static_cast<double>(seed) * 0.5);
    SgdolMomentum mom(oracle.initial_point(), kRosenbrockM, 10.0, true, true);
    SgdolGlobal ref(oracle.initial_point(), kRosenbrockM, 10.0, Curvature::kDoubled, true);
    RngStream ra = oracle_stream(kSeed + seed, 0), rb = oracle_stream(kSeed + seed, 0);
    double L = 0.0;
    for (int t = 0; t < 100; ++t) {
      const auto pa = oracle.sample_pair(mom.x(), ra);
      L = std::max(L, max_pair_norm(pa));
      mom.step(pa);
      ref.step(oracle.sample_pair(ref.x(), rb));
      identical = identical && mom.x() == ref.x();
    }
    g_audit.audit(*mom.ledger(), "momentum eta seed " + std::to_string(seed), L);
    g_audit.audit(*ref.ledger(), "doubled sgdol seed " + std::to_string(seed), L);
  }
  return {identical, std::string("10 seeds, T=100: iterates ") +
                         (identical ? "bitwise identical" : "DIFFER")};
}

Outcome criterion_regret_bound() {
  return {g_audit.failures == 0 && g_audit.ledgers > 0,
          std::to_string(g_audit.ledgers) + " ledgers, " + std::to_string(g_audit.grid_checks) +
              " checks, " + std::to_string(g_audit.failures) + " violations; min slack " +
              fmt(g_audit.worst_margin) +
              (g_audit.failures ? "; first: " + g_audit.first_failure : "")};
}

struct Criterion {
  int id;
  std::string name;
  double budget_seconds;
  std::function<Outcome()> body;
};

}  // namespace

int main() {
  // Criterion 8 audits the runs of the others, so it is evaluated last and
  // printed in order.
  const std::vector<Criterion> criteria{
      {1, "FTRL closed form matches argmin oracle", 5, criterion_ftrl_closed_form},
      {2, "noiseless Rosenbrock: SGDOL == SGD(lr=1/M)", 5, criterion_noiseless_recovery},
      {3, "noise adaptivity of the learned stepsize", 120, criterion_noise_adaptivity},
      {4, "SGDOL converges where SGD oscillates", 120, criterion_convergence_vs_oscillation},
      {5, "expected decrease bounded by surrogate (Monte Carlo)", 60, criterion_descent_bound},
      {6, "linear rate under the PL condition", 1, criterion_pl_rate},
      {7, "per-coordinate stepsize adaptivity", 10, criterion_coordinate_adaptivity},
      {9, "classification experiment shape", 300, criterion_classification},
      {10, "momentum with beta=0 degenerates to SGDOL", 60, criterion_momentum_degeneracy},
      {8, "FTRL regret within its bound on all runs", 60, criterion_regret_bound},
  };

  std::cerr << "kernels: " << kernels::backend_name(kernels::active_backend()) << '\n';
  std::map<int, std::string> lines;
  bool all = true;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.body();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double elapsed = seconds_since(start);
    const bool in_budget = elapsed <= c.budget_seconds;
    const bool ok = outcome.passed && in_budget;
    all = all && ok;
    std::ostringstream line;
    line << (ok ? "PASS" : "FAIL") << "  criterion " << c.id << ": " << c.name << ": "
         << outcome.detail << " [" << fmt(elapsed) << " s"
         << (in_budget ? "" : ", over budget of " + fmt(c.budget_seconds) + " s") << "]";
    lines[c.id] = line.str();
    std::cerr << "  done " << c.id << '\n';
  }
  for (const auto& [id, line] : lines) std::cout << line << '\n';
  std::cout << (all ? "all acceptance criteria passed" : "acceptance FAILED") << '\n';
  return all ? 0 : 1;
}
