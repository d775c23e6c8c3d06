#pragma once

#include <cstddef>
#include <memory>
#include <span>

#include "sgdol/oracles/dataset.hpp"
#include "sgdol/oracles/oracle.hpp"

namespace sgdol {

// φ(θ) = θ²/(1+θ²): bounded, nonconvex, 1-Lipschitz, 2-smooth.
double sigmoid_phi(double theta);
double sigmoid_phi_prime(double theta);

// f(x) = (1/m) Σ φ(a_iᵀx − y_i)
double sigmoid_loss_f(const Vec& x, const Dataset& data);

// (1/|rows|) Σ_{i∈rows} φ'(a_iᵀx − y_i) a_i; rows may repeat.
Vec sigmoid_loss_grad(const Vec& x, const Dataset& data, std::span<const std::size_t> rows);
Vec sigmoid_loss_grad(const Vec& x, const Dataset& data);

// Minibatch oracle: each gradient of a pair averages batch_size rows drawn
// i.i.d. with replacement; the two batches use consecutive, disjoint draws.
// batch_size == m uses the full dataset for both members.
class SigmoidLossOracle final : public StochasticOracle {
public:
  SigmoidLossOracle(std::shared_ptr<const Dataset> data, std::size_t batch_size);

  const Dataset& data() const noexcept { return *data_; }
  std::size_t batch_size() const noexcept { return batch_size_; }
  bool full_batch() const noexcept { return batch_size_ == data_->size(); }

  std::size_t dim() const override { return data_->n_features(); }
  GradientPair sample_pair(const Vec& x, RngStream& rng) const override;

  bool has_exact_f() const override { return true; }
  bool has_exact_grad() const override { return true; }
  double f(const Vec& x) const override { return sigmoid_loss_f(x, *data_); }
  Vec grad(const Vec& x) const override { return sigmoid_loss_grad(x, *data_); }

  // 2 · max_i ‖a_i‖², an upper bound on the smoothness constant.
  std::optional<double> smoothness() const override { return smoothness_bound_; }

private:
  std::shared_ptr<const Dataset> data_;
  std::size_t batch_size_;
  double smoothness_bound_;
};

GradientPair minibatch_pair(const Dataset& data, const Vec& x, std::size_t batch_size,
                            RngStream& rng);

}  // namespace sgdol
