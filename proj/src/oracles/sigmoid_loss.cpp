#include "sgdol/oracles/sigmoid_loss.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

#include "sgdol/core/error.hpp"
#include "sgdol/kernels/kernels.hpp"

namespace sgdol {

double sigmoid_phi(double theta) {
  const double t2 = theta * theta;
  return t2 / (1.0 + t2);
}

double sigmoid_phi_prime(double theta) {
  const double d = 1.0 + theta * theta;
  return 2.0 * theta / (d * d);
}

namespace {

void require_width(const Vec& x, const Dataset& data) {
  if (x.dim() != data.n_features()) {
    throw ContractViolation("sigmoid loss: point has dim " + std::to_string(x.dim()) +
                            ", dataset has " + std::to_string(data.n_features()) + " features");
  }
}

double residual(const Vec& x, const Dataset& data, std::size_t row) {
  return kernels::dot(data.features(row), x.span()) - data.label(row);
}

}  // namespace

double sigmoid_loss_f(const Vec& x, const Dataset& data) {
  if (data.empty()) throw ContractViolation("sigmoid_loss_f: empty dataset");
  require_width(x, data);
  double acc = 0.0;
  for (std::size_t r = 0; r < data.size(); ++r) acc += sigmoid_phi(residual(x, data, r));
  return acc / static_cast<double>(data.size());
}

Vec sigmoid_loss_grad(const Vec& x, const Dataset& data, std::span<const std::size_t> rows) {
  if (rows.empty()) throw ContractViolation("sigmoid_loss_grad: empty row set");
  require_width(x, data);
  Vec out(data.n_features());
  for (std::size_t r : rows) {
    const double w = sigmoid_phi_prime(residual(x, data, r));
    if (w != 0.0) kernels::axpy(w, data.features(r), out.mutable_span());
  }
  const double inv = 1.0 / static_cast<double>(rows.size());
  for (auto& v : out.mutable_span()) v *= inv;
  return out;
}

Vec sigmoid_loss_grad(const Vec& x, const Dataset& data) {
  std::vector<std::size_t> all(data.size());
  std::iota(all.begin(), all.end(), std::size_t{0});
  return sigmoid_loss_grad(x, data, all);
}

GradientPair minibatch_pair(const Dataset& data, const Vec& x, std::size_t batch_size,
                            RngStream& rng) {
  if (batch_size < 1 || batch_size > data.size()) {
    throw ContractViolation("minibatch_pair: batch_size must be in [1, rows]");
  }
  if (batch_size == data.size()) {
    Vec full = sigmoid_loss_grad(x, data);
    return {full, full};
  }
  std::vector<std::size_t> batch(batch_size);
  auto draw = [&] {
    for (auto& r : batch) r = rng.uniform_index(data.size());
    return sigmoid_loss_grad(x, data, batch);
  };
  Vec g = draw();
  Vec g_prime = draw();
  return {std::move(g), std::move(g_prime)};
}

SigmoidLossOracle::SigmoidLossOracle(std::shared_ptr<const Dataset> data, std::size_t batch_size)
    : data_(std::move(data)), batch_size_(batch_size), smoothness_bound_(0.0) {
  if (!data_ || data_->empty()) throw ContractViolation("SigmoidLossOracle: empty dataset");
  if (batch_size_ < 1 || batch_size_ > data_->size()) {
    throw ContractViolation("SigmoidLossOracle: batch_size must be in [1, rows]");
  }
  for (std::size_t r = 0; r < data_->size(); ++r) {
    const auto row = data_->features(r);
    smoothness_bound_ = std::max(smoothness_bound_, 2.0 * kernels::dot(row, row));
  }
}

GradientPair SigmoidLossOracle::sample_pair(const Vec& x, RngStream& rng) const {
  require_dim(x);
  return minibatch_pair(*data_, x, batch_size_, rng);
}

}  // namespace sgdol
