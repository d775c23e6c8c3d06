#pragma once

#include <cstddef>
#include <vector>

#include "sgdol/core/records.hpp"
#include "sgdol/core/rng.hpp"
#include "sgdol/oracles/oracle.hpp"
#include "sgdol/optimizers/optimizer.hpp"

namespace sgdol {

struct RunResult {
  std::vector<TrajectoryRecord> records;
  // Uniformly sampled output iterate x_k, k ∈ {1, ..., T}.
  std::size_t output_index = 1;
  Vec output_point;
  Vec final_point;  // x_{T+1}
};

// max(1, T / 500)
std::size_t default_report_every(std::size_t T);

// Runs T rounds. Records are taken at t = 1, 1 + r, 1 + 2r, ... (r =
// report_every), i.e. ⌈T/r⌉ of them; exact f and ‖∇f‖² of x_t are filled in
// when the oracle exposes them. oracle_rng feeds the gradient pairs,
// output_rng draws k.
RunResult run(Optimizer& optimizer, const StochasticOracle& oracle, std::size_t T,
              RngStream& oracle_rng, RngStream& output_rng, std::size_t report_every);

}  // namespace sgdol
