#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string_view>
#include <vector>

#include "sgdol/core/rng.hpp"

namespace sgdol {

// Dense binary-classification data, row-major. When has_bias() is set the
// last feature column is the constant 1 appended at load time and
// n_features() includes it.
class Dataset {
public:
  Dataset() = default;
  Dataset(std::size_t n_features, bool has_bias);

  std::size_t size() const noexcept { return labels_.size(); }
  bool empty() const noexcept { return labels_.empty(); }
  std::size_t n_features() const noexcept { return n_features_; }
  bool has_bias() const noexcept { return has_bias_; }

  std::span<const double> features(std::size_t row) const {
    return {values_.data() + row * n_features_, n_features_};
  }
  double label(std::size_t row) const { return labels_[row]; }

  // features.size() must equal n_features().
  void add_row(std::span<const double> features, double label);

  Dataset subset(std::span<const std::size_t> rows) const;

  friend bool operator==(const Dataset&, const Dataset&) = default;

private:
  std::size_t n_features_ = 0;
  bool has_bias_ = false;
  std::vector<double> values_;
  std::vector<double> labels_;
};

struct LibsvmOptions {
  bool append_bias = true;
  // 0 infers the width from the largest index seen.
  std::size_t n_features = 0;
  // Require labels in {-1, +1}.
  bool binary = true;
};

Dataset parse_libsvm(std::istream& in, const LibsvmOptions& options = {});
Dataset parse_libsvm(std::string_view text, const LibsvmOptions& options = {});
Dataset load_libsvm(const std::filesystem::path& path, const LibsvmOptions& options = {});

// Emits nonzero features (bias column omitted) with shortest round-trip
// decimals, so parsing the output with the same options reproduces the data.
void write_libsvm(const Dataset& data, std::ostream& out);
void write_libsvm(const Dataset& data, const std::filesystem::path& path);

// Downsamples the majority class without replacement to the minority count,
// then shuffles the row order; both draws come from rng.
Dataset balance_subsample(const Dataset& data, RngStream& rng);

}  // namespace sgdol
