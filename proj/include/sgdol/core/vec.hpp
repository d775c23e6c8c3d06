#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace sgdol {

class RngStream;

// Dense real vector. Entries are finite on construction; in-place updates
// through mutable_span() are re-checked with is_finite() by the caller.
class Vec {
public:
  Vec() = default;
  explicit Vec(std::size_t dim, double fill = 0.0);
  Vec(std::initializer_list<double> entries);
  explicit Vec(std::vector<double> entries);

  std::size_t dim() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }

  double operator[](std::size_t i) const { return entries_[i]; }
  double& operator[](std::size_t i) { return entries_[i]; }

  std::span<const double> span() const noexcept { return entries_; }
  std::span<double> mutable_span() noexcept { return entries_; }
  const std::vector<double>& entries() const noexcept { return entries_; }

  auto begin() const noexcept { return entries_.begin(); }
  auto end() const noexcept { return entries_.end(); }

  bool is_finite() const noexcept;

  friend bool operator==(const Vec&, const Vec&) = default;

private:
  std::vector<double> entries_;
};

double dot(const Vec& a, const Vec& b);
double sq_norm(const Vec& a);
double norm(const Vec& a);

// y += alpha * x
void axpy(double alpha, const Vec& x, Vec& y);

Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator*(double c, const Vec& a);

// dim i.i.d. N(0, sigma^2) draws; sigma == 0 yields the zero vector without
// consuming randomness.
Vec gaussian(RngStream& rng, std::size_t dim, double sigma);

}  // namespace sgdol
