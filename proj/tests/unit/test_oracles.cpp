#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <set>
#include <memory>
#include <sstream>

#include "sgdol/core/error.hpp"
#include "sgdol/diagnostics/diagnostics.hpp"
#include "sgdol/oracles/dataset.hpp"
#include "sgdol/oracles/quadratic.hpp"
#include "sgdol/oracles/rosenbrock.hpp"
#include "sgdol/oracles/sigmoid_loss.hpp"
#include "sgdol/oracles/synthetic.hpp"

using namespace sgdol;

namespace {

const std::filesystem::path kData = SGDOL_TEST_DATA_DIR;

// Empirical mean/std of a per-coordinate statistic.
struct Moments {
  std::vector<double> sum, sum_sq;
  std::size_t n = 0;
  explicit Moments(std::size_t d) : sum(d, 0.0), sum_sq(d, 0.0) {}
  void add(const Vec& v) {
    for (std::size_t i = 0; i < v.dim(); ++i) {
      sum[i] += v[i];
      sum_sq[i] += v[i] * v[i];
    }
    ++n;
  }
  double mean(std::size_t i) const { return sum[i] / n; }
  double stddev(std::size_t i) const {
    const double m = mean(i);
    return std::sqrt(std::max(0.0, (sum_sq[i] - n * m * m) / (n - 1)));
  }
};

Dataset five_rows() {
  RngStream rng(3, 3);
  Dataset full = make_synthetic_classification(3, 8, 3, rng);
  const std::vector<std::size_t> rows{0, 1, 2, 3, 4};
  return full.subset(rows);
}

}  // namespace

TEST_CASE("rosenbrock values") {
  CHECK(rosenbrock_f(Vec{1, 1}) == 0.0);
  CHECK(rosenbrock_f(Vec{0, 0}) == 1.0);
  CHECK(rosenbrock_f(Vec{-1, 1}) == 4.0);
  CHECK(rosenbrock_grad(Vec{1, 1}) == Vec{0, 0});
  CHECK(rosenbrock_grad(Vec{0, 0}) == Vec{-2, 0});
  CHECK_THROWS_AS(rosenbrock_f(Vec{1, 2, 3}), ContractViolation);
}

TEST_CASE("analytic gradients match central finite differences") {
  RngStream rng(17, 0);
  for (int k = 0; k < 100; ++k) {
    const Vec x{4.0 * rng.uniform() - 2.0, 4.0 * rng.uniform() - 2.0};
    const Vec fd = diagnostics::finite_diff_grad(rosenbrock_f, x, 1e-6);
    const Vec g = rosenbrock_grad(x);
    for (std::size_t i = 0; i < 2; ++i) CHECK(std::abs(fd[i] - g[i]) <= 1e-5);
  }
  const Dataset data = five_rows();
  for (int k = 0; k < 100; ++k) {
    Vec x(data.n_features());
    for (auto& v : x.mutable_span()) v = 2.0 * rng.uniform() - 1.0;
    const Vec fd =
        diagnostics::finite_diff_grad([&](const Vec& p) { return sigmoid_loss_f(p, data); }, x, 1e-6);
    const Vec g = sigmoid_loss_grad(x, data);
    for (std::size_t i = 0; i < x.dim(); ++i) CHECK(std::abs(fd[i] - g[i]) <= 1e-5);
  }
}

TEST_CASE("zero-noise rosenbrock oracle returns the exact gradient twice") {
  const RosenbrockOracle oracle(0.0);
  RngStream rng(1, 1);
  for (const Vec& x : {Vec{0, 0}, Vec{0.3, -1.2}, Vec{2, 2}}) {
    const auto pair = oracle.sample_pair(x, rng);
    CHECK(pair.g == rosenbrock_grad(x));
    CHECK(pair.g_prime == rosenbrock_grad(x));
  }
  CHECK_THROWS_AS(oracle.sample_pair(Vec{0, 0, 0}, rng), ContractViolation);
}

TEST_CASE("noisy rosenbrock oracle is unbiased with independent members") {
  const RosenbrockOracle oracle(0.2);
  RngStream rng(9, 9);
  const Vec x{0, 0};
  const Vec exact = rosenbrock_grad(x);
  const std::size_t n = 100000;
  Moments g(2);
  double inner_sum = 0, inner_sq = 0;
  for (std::size_t k = 0; k < n; ++k) {
    const auto pair = oracle.sample_pair(x, rng);
    g.add(pair.g);
    const double ip = dot(pair.g, pair.g_prime);
    inner_sum += ip;
    inner_sq += ip * ip;
  }
  for (std::size_t i = 0; i < 2; ++i) {
    CHECK(std::abs(g.mean(i) - exact[i]) <= 3.0 * 0.2 / std::sqrt(double(n)));
    CHECK(std::abs(g.mean(i) - exact[i]) <= 4.0 * g.stddev(i) / std::sqrt(double(n)));
  }
  const double m = inner_sum / n;
  const double sd = std::sqrt((inner_sq - n * m * m) / (n - 1));
  CHECK(std::abs(m - sq_norm(exact)) <= 4.0 * sd / std::sqrt(double(n)));
}

TEST_CASE("sigmoid loss values") {
  Dataset bias_only(1, true);
  bias_only.add_row(std::vector<double>{1.0}, 1.0);
  CHECK(sigmoid_loss_f(Vec{0.0}, bias_only) == 0.5);
  CHECK(sigmoid_loss_f(Vec{1.0}, bias_only) == 0.0);
  CHECK(sigmoid_loss_grad(Vec{1.0}, bias_only) == Vec{0.0});
  CHECK_THROWS_AS(sigmoid_loss_f(Vec{0.0}, Dataset(1, true)), ContractViolation);

  const Dataset data = five_rows();
  RngStream rng(4, 4);
  for (int k = 0; k < 50; ++k) {
    Vec x(data.n_features());
    for (auto& v : x.mutable_span()) v = 10.0 * rng.uniform() - 5.0;
    const double f = sigmoid_loss_f(x, data);
    CHECK(f >= 0.0);
    CHECK(f < 1.0);
  }
}

TEST_CASE("phi is 1-Lipschitz and 2-smooth") {
  double max_d1 = 0.0, max_d2 = 0.0;
  const double h = 1e-5;
  for (int k = 0; k <= 20000; ++k) {
    const double t = -10.0 + 20.0 * k / 20000.0;
    max_d1 = std::max(max_d1, std::abs(sigmoid_phi_prime(t)));
    max_d2 = std::max(max_d2,
                      std::abs((sigmoid_phi_prime(t + h) - sigmoid_phi_prime(t - h)) / (2 * h)));
  }
  CHECK(max_d1 <= 1.0);
  CHECK(max_d2 <= 2.0 + 1e-6);
  CHECK(max_d2 > 1.99);
}

TEST_CASE("minibatch pairs") {
  auto data = std::make_shared<Dataset>(five_rows());
  RngStream rng(8, 8);
  Vec x(data->n_features());
  for (std::size_t i = 0; i < x.dim(); ++i) x[i] = 0.1 * static_cast<double>(i) - 0.2;

  SUBCASE("full batch is exact for both members") {
    const auto pair = minibatch_pair(*data, x, data->size(), rng);
    CHECK(pair.g == sigmoid_loss_grad(x, *data));
    CHECK(pair.g_prime == pair.g);
  }
  SUBCASE("batch of one is unbiased and E<g,g'> = |grad|^2") {
    const SigmoidLossOracle oracle(data, 1);
    const Vec exact = oracle.grad(x);
    const std::size_t n = 100000;
    Moments g(x.dim());
    double inner_sum = 0, inner_sq = 0;
    for (std::size_t k = 0; k < n; ++k) {
      const auto pair = oracle.sample_pair(x, rng);
      g.add(pair.g);
      const double ip = dot(pair.g, pair.g_prime);
      inner_sum += ip;
      inner_sq += ip * ip;
    }
    for (std::size_t i = 0; i < x.dim(); ++i) {
      CHECK(std::abs(g.mean(i) - exact[i]) <= 4.0 * g.stddev(i) / std::sqrt(double(n)) + 1e-15);
    }
    const double m = inner_sum / n;
    const double sd = std::sqrt((inner_sq - n * m * m) / (n - 1));
    CHECK(std::abs(m - sq_norm(exact)) <= 4.0 * sd / std::sqrt(double(n)));
  }
  SUBCASE("batch size bounds") {
    CHECK_THROWS_AS(minibatch_pair(*data, x, 0, rng), ContractViolation);
    CHECK_THROWS_AS(minibatch_pair(*data, x, data->size() + 1, rng), ContractViolation);
    CHECK_THROWS_AS(SigmoidLossOracle(data, 0), ContractViolation);
  }
}

TEST_CASE("quadratic oracle") {
  const QuadraticOracle q(Vec{1.0, 0.1}, Vec{0.0, 1.0}, Vec{1.0, 1.0});
  CHECK(q.f(Vec{2.0, 0.0}) == 2.0);
  CHECK(q.grad(Vec{2.0, 3.0}) == Vec{2.0, 0.30000000000000004});
  CHECK(*q.smoothness() == 1.0);
  CHECK(*q.pl_constant() == 0.1);
  RngStream rng(1, 1);
  const auto pair = q.sample_pair(Vec{2.0, 3.0}, rng);
  CHECK(pair.g[0] == 2.0);  // noiseless coordinate
  CHECK(pair.g_prime[0] == 2.0);
  CHECK(pair.g[1] != pair.g_prime[1]);
  CHECK_THROWS_AS(QuadraticOracle(Vec{0.0}, Vec{0.0}, Vec{1.0}), ContractViolation);
}

TEST_CASE("parse_libsvm format") {
  LibsvmOptions opt;
  opt.n_features = 3;
  const Dataset a = parse_libsvm("+1 1:0.5 3:1\n", opt);
  REQUIRE(a.size() == 1);
  CHECK(a.n_features() == 4);
  CHECK(std::vector<double>(a.features(0).begin(), a.features(0).end()) ==
        std::vector<double>{0.5, 0, 1, 1});
  CHECK(a.label(0) == 1.0);

  const Dataset b = parse_libsvm("-1\n", opt);
  CHECK(std::vector<double>(b.features(0).begin(), b.features(0).end()) ==
        std::vector<double>{0, 0, 0, 1});
  CHECK(b.label(0) == -1.0);

  const Dataset c = parse_libsvm("  # header\n\n+1 2:3 # trailing\n\t-1 1:2\n");
  CHECK(c.size() == 2);
  CHECK(c.n_features() == 3);

  SUBCASE("errors carry the line number") {
    try {
      parse_libsvm("+1 1:1\n1 2:a\n");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line() == 2);
    }
    CHECK_THROWS_AS(parse_libsvm("2 1:1\n"), ParseError);
    CHECK_THROWS_AS(parse_libsvm("+1 2:1 1:1\n"), ParseError);
    CHECK_THROWS_AS(parse_libsvm("+1 0:1\n"), ParseError);
    CHECK_THROWS_AS(parse_libsvm("+1 1\n"), ParseError);
    CHECK_THROWS_AS(parse_libsvm("x 1:1\n"), ParseError);
    CHECK_THROWS_AS(parse_libsvm("+1 5:1\n", opt), ParseError);
    LibsvmOptions any_label;
    any_label.binary = false;
    CHECK(parse_libsvm("2 1:1\n", any_label).label(0) == 2.0);
  }
  CHECK_THROWS_AS(load_libsvm(kData / "missing.libsvm"), IoError);
}

TEST_CASE("fixtures load") {
  const Dataset three = load_libsvm(kData / "three_rows.libsvm");
  CHECK(three.size() == 3);
  CHECK(three.n_features() == 4);
  LibsvmOptions opt;
  opt.n_features = 123;
  const Dataset synth = load_libsvm(kData / "synthetic_a9a_500.libsvm", opt);
  CHECK(synth.size() == 500);
  CHECK(synth.n_features() == 124);
}

TEST_CASE("libsvm write/parse round trip") {
  RngStream rng(31, 0);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t width = 1 + rng.uniform_index(12);
    const bool bias = trial % 2 == 0;
    Dataset data(width + (bias ? 1 : 0), bias);
    std::vector<double> row(data.n_features());
    const std::size_t rows = 1 + rng.uniform_index(30);
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t i = 0; i < width; ++i) {
        row[i] = rng.uniform() < 0.4 ? 0.0 : rng.normal() * std::pow(10.0, rng.uniform_index(9) - 4.0);
      }
      if (bias) row.back() = 1.0;
      data.add_row(row, rng.uniform() < 0.5 ? 1.0 : -1.0);
    }
    std::ostringstream out;
    write_libsvm(data, out);
    LibsvmOptions opt;
    opt.append_bias = bias;
    opt.n_features = width;
    CHECK(parse_libsvm(out.str(), opt) == data);
  }
}

TEST_CASE("balance_subsample") {
  Dataset data(2, false);
  for (int i = 0; i < 100; ++i) data.add_row(std::vector<double>{double(i), 0.0}, 1.0);
  for (int i = 0; i < 40; ++i) data.add_row(std::vector<double>{double(i), 1.0}, -1.0);
  RngStream rng(5, 0);
  const Dataset balanced = balance_subsample(data, rng);
  CHECK(balanced.size() == 80);
  std::size_t pos = 0;
  for (std::size_t r = 0; r < balanced.size(); ++r) pos += balanced.label(r) > 0;
  CHECK(pos == 40);

  RngStream again(5, 0);
  CHECK(balance_subsample(data, again) == balanced);

  SUBCASE("balanced input keeps the same multiset of rows") {
    Dataset even(1, false);
    for (int i = 0; i < 10; ++i) even.add_row(std::vector<double>{double(i)}, i % 2 ? 1.0 : -1.0);
    RngStream r2(6, 0);
    const Dataset out = balance_subsample(even, r2);
    std::multiset<std::pair<double, double>> a, b;
    for (std::size_t r = 0; r < 10; ++r) {
      a.insert({even.features(r)[0], even.label(r)});
      b.insert({out.features(r)[0], out.label(r)});
    }
    CHECK(a == b);
  }
  SUBCASE("single class is rejected") {
    Dataset one(1, false);
    one.add_row(std::vector<double>{1.0}, 1.0);
    RngStream r3(7, 0);
    CHECK_THROWS_AS(balance_subsample(one, r3), ContractViolation);
  }
}
