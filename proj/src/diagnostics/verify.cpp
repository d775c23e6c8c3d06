#include <array>
#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>
#include <string>

#include "sgdol/diagnostics/diagnostics.hpp"
#include "sgdol/kernels/kernels.hpp"
#include "sgdol/optimizers/baselines.hpp"
#include "sgdol/optimizers/run.hpp"
#include "sgdol/optimizers/sgdol.hpp"
#include "sgdol/oracles/rosenbrock.hpp"
#include "sgdol/oracles/sigmoid_loss.hpp"
#include "sgdol/oracles/synthetic.hpp"

namespace sgdol::diagnostics {

std::vector<GradientPair> random_history(RngStream& rng, std::size_t rounds, std::size_t dim) {
  std::vector<GradientPair> history;
  history.reserve(rounds);
  auto draw = [&] {
    Vec v(dim);
    for (auto& e : v.mutable_span()) e = 2.0 * rng.uniform() - 1.0;
    return v;
  };
  for (std::size_t t = 0; t < rounds; ++t) {
    Vec g = draw();
    history.push_back({std::move(g), draw()});
  }
  return history;
}

namespace {

class Report {
public:
  explicit Report(std::ostream& out) : out_(out) {}

  void check(const std::string& name, bool ok, const std::string& detail) {
    out_ << (ok ? "PASS " : "FAIL ") << name << ": " << detail << '\n';
    all_ok_ = all_ok_ && ok;
  }

  bool all_ok() const { return all_ok_; }

private:
  std::ostream& out_;
  bool all_ok_ = true;
};

std::string fmt(double v) {
  std::ostringstream ss;
  ss.precision(4);
  ss << v;
  return ss.str();
}

void check_kernels(Report& report, RngStream& rng) {
  const kernels::KernelTable* simd = kernels::avx2_table();
  if (simd == nullptr) {
    report.check("kernel equivalence", true, "no SIMD backend on this machine, scalar only");
    return;
  }
  const auto& ref = kernels::scalar_table();
  double worst = 0.0;
  bool exact_elementwise = true;
  for (std::size_t n : {0u, 1u, 3u, 4u, 7u, 8u, 9u, 31u, 124u, 1000u}) {
    std::vector<double> a(n), b(n), s(n);
    for (std::size_t i = 0; i < n; ++i) {
      a[i] = 2.0 * rng.uniform() - 1.0;
      b[i] = 2.0 * rng.uniform() - 1.0;
      s[i] = rng.uniform();
    }
    double scale = 0.0;
    for (std::size_t i = 0; i < n; ++i) scale += std::abs(a[i] * b[i]);
    const double diff = std::abs(ref.dot(a.data(), b.data(), n) - simd->dot(a.data(), b.data(), n));
    if (scale > 0.0) worst = std::max(worst, diff / scale);

    std::vector<double> y1 = b, y2 = b;
    ref.axpy(-0.37, a.data(), y1.data(), n);
    simd->axpy(-0.37, a.data(), y2.data(), n);
    exact_elementwise = exact_elementwise && y1 == y2;
    ref.hadamard_sub(s.data(), a.data(), y1.data(), n);
    simd->hadamard_sub(s.data(), a.data(), y2.data(), n);
    exact_elementwise = exact_elementwise && y1 == y2;
  }
  report.check("kernel equivalence", worst <= 1e-14 && exact_elementwise,
               std::string(simd->name) + " vs scalar, dot rel err " + fmt(worst) +
                   (exact_elementwise ? ", axpy/hadamard bit-identical" : ", axpy MISMATCH"));
}

void check_ftrl(Report& report, RngStream& rng) {
  double worst = 0.0;
  for (int k = 0; k < 200; ++k) {
    const double alpha = std::array{0.1, 1.0, 10.0}[k % 3];
    const double M = std::array{0.5, 1.0, 2.0}[(k / 3) % 3];
    const auto history = random_history(rng, 1 + rng.uniform_index(50), 1 + rng.uniform_index(4));
    FtrlState state(alpha, M);
    for (const auto& p : history) state.observe(SurrogateLoss(M, p.g, p.g_prime));
    worst = std::max(worst, std::abs(state.stepsize() - ftrl_argmin_oracle(alpha, M, history)));
  }
  report.check("ftrl closed form", worst <= 1e-8,
               "max |closed form - golden section| = " + fmt(worst) + " over 200 histories");
}

void check_gradients(Report& report, RngStream& rng) {
  double worst_rosen = 0.0;
  for (int k = 0; k < 100; ++k) {
    const Vec x{4.0 * rng.uniform() - 2.0, 4.0 * rng.uniform() - 2.0};
    const Vec fd = finite_diff_grad(rosenbrock_f, x, 1e-6);
    worst_rosen = std::max(worst_rosen, norm(fd - rosenbrock_grad(x)));
  }
  RngStream data_rng = rng.derive(1);
  const Dataset data = make_synthetic_classification(20, 30, 5, data_rng);
  double worst_sig = 0.0;
  for (int k = 0; k < 100; ++k) {
    Vec x(data.n_features());
    for (auto& v : x.mutable_span()) v = 2.0 * rng.uniform() - 1.0;
    const Vec fd = finite_diff_grad([&](const Vec& p) { return sigmoid_loss_f(p, data); }, x, 1e-6);
    worst_sig = std::max(worst_sig, norm(fd - sigmoid_loss_grad(x, data)));
  }
  report.check("finite differences", worst_rosen <= 1e-5 && worst_sig <= 1e-5,
               "rosenbrock " + fmt(worst_rosen) + ", sigmoid loss " + fmt(worst_sig));
}

void check_descent_bound(Report& report, RngStream& rng, std::size_t samples) {
  bool ok = true;
  std::string detail;
  for (double sigma : {0.0, 0.2, 5.0}) {
    const RosenbrockOracle oracle(sigma);
    for (const Vec& x : {Vec{0.0, 0.0}, Vec{0.5, 0.3}}) {
      const auto v = descent_bound_check(oracle, x, 1.0 / kRosenbrockSmoothness, samples, rng);
      ok = ok && v.passed;
    }
    detail += "sigma=" + fmt(sigma) + " ";
  }
  report.check("expected descent bound", ok, detail + "(" + std::to_string(samples) + " draws)");
}

void check_pl(Report& report) {
  const QuadraticOracle oracle(Vec{0.1, 0.3, 0.5, 0.7, 1.0}, Vec(5), Vec{1.0, -2.0, 0.5, 1.5, -1.0});
  const auto v = pl_rate_check(oracle, kDefaultAlpha, 200);
  report.check("linear rate under PL", v.rate_ok && v.decrease_ok,
               "final gap " + fmt(v.final_gap) + " after 200 steps");
}

void check_noiseless(Report& report) {
  const RosenbrockOracle oracle(0.0);
  SgdolGlobal sgdol(Vec{0.0, 0.0}, kRosenbrockSmoothness, kDefaultAlpha);
  Sgd sgd(Vec{0.0, 0.0}, 1.0 / kRosenbrockSmoothness);
  RngStream rng(0, 0);
  bool same = true;
  for (int t = 0; t < 2000 && same; ++t) {
    const auto r = sgdol.step(oracle.sample_pair(sgdol.x(), rng));
    sgd.step(oracle.sample_pair(sgd.x(), rng));
    same = sgdol.x() == sgd.x() && r.eta_used[0] == 1.0 / kRosenbrockSmoothness;
  }
  report.check("noiseless recovery", same, "SGDOL == SGD(lr=1/M) for 2000 steps");
}

void check_regret(Report& report, RngStream& rng) {
  const RosenbrockOracle oracle(5.0);
  const double M = kRosenbrockSmoothness;
  SgdolGlobal opt(Vec{0.0, 0.0}, M, kDefaultAlpha, Curvature::kStandard, true);
  RngStream pick = rng.derive(2);
  run(opt, oracle, 2000, rng, pick, 100);
  bool ok = true;
  for (int k = 0; k < 32; ++k) {
    const double eta = (2.0 / M) * k / 31.0;
    ok = ok && regret_vs(*opt.ledger(), eta) <= regret_bound_rhs(*opt.ledger(), eta);
  }
  report.check("regret bound", ok, "32-point comparator grid, 2000 noisy rounds");
}

}  // namespace

bool run_verify_suite(std::ostream& out, const VerifyOptions& options) {
  Report report(out);
  RngStream rng(options.seed, 0);
  check_kernels(report, rng);
  check_ftrl(report, rng);
  check_gradients(report, rng);
  check_descent_bound(report, rng, options.descent_samples);
  check_pl(report);
  check_noiseless(report);
  check_regret(report, rng);
  out << (report.all_ok() ? "all checks passed" : "some checks FAILED") << '\n';
  return report.all_ok();
}

}  // namespace sgdol::diagnostics
