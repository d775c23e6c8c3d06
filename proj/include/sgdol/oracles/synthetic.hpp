#pragma once

#include <cstddef>

#include "sgdol/core/rng.hpp"
#include "sgdol/oracles/dataset.hpp"

namespace sgdol {

// Balanced binary data shaped like one-hot encoded census records: the
// features are split into `groups` contiguous blocks and every row has exactly
// one active (value 1) feature per block. Labels come from the sign of a
// random linear score plus unit Gaussian noise; rows are drawn until each
// class holds rows_per_class examples.
Dataset make_synthetic_classification(std::size_t rows_per_class, std::size_t n_features,
                                      std::size_t groups, RngStream& rng,
                                      bool append_bias = true);

}  // namespace sgdol
