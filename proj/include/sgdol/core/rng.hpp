#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

namespace sgdol {

// Deterministic random stream keyed by (seed, stream id). The engine state is
// derived by splitmix64-mixing both keys, so distinct ids give unrelated
// sequences and identical keys replay bit-for-bit.
class RngStream {
public:
  RngStream(std::uint64_t seed, std::uint64_t stream_id);

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t stream_id() const noexcept { return stream_id_; }

  // Child stream for a sub-purpose; depends only on (seed, stream_id, tag).
  RngStream derive(std::uint64_t tag) const;

  std::uint64_t next_u64() { return engine_(); }
  double uniform();                        // [0, 1)
  std::size_t uniform_index(std::size_t n);  // [0, n)
  double normal();                         // N(0, 1)

private:
  std::uint64_t seed_;
  std::uint64_t stream_id_;
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

std::uint64_t splitmix64(std::uint64_t x);

// Stream id for a tuple of small indices (run, repetition, purpose, ...).
std::uint64_t stream_id(std::uint64_t a, std::uint64_t b = 0, std::uint64_t c = 0);

}  // namespace sgdol
