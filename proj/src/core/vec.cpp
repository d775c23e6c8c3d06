#include "sgdol/core/vec.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "sgdol/core/error.hpp"
#include "sgdol/core/rng.hpp"
#include "sgdol/kernels/kernels.hpp"

namespace sgdol {
namespace {

void require_same_dim(const Vec& a, const Vec& b, const char* op) {
  if (a.dim() != b.dim()) {
    throw ContractViolation(std::string(op) + ": dimension mismatch (" + std::to_string(a.dim()) +
                            " vs " + std::to_string(b.dim()) + ")");
  }
}

void require_finite(const Vec& v) {
  if (!v.is_finite()) throw ContractViolation("Vec: non-finite entry");
}

}  // namespace

Vec::Vec(std::size_t dim, double fill) : entries_(dim, fill) { require_finite(*this); }

Vec::Vec(std::initializer_list<double> entries) : entries_(entries) { require_finite(*this); }

Vec::Vec(std::vector<double> entries) : entries_(std::move(entries)) { require_finite(*this); }

bool Vec::is_finite() const noexcept {
  return std::all_of(entries_.begin(), entries_.end(), [](double v) { return std::isfinite(v); });
}

double dot(const Vec& a, const Vec& b) {
  require_same_dim(a, b, "dot");
  return kernels::dot(a.span(), b.span());
}

double sq_norm(const Vec& a) { return kernels::dot(a.span(), a.span()); }

double norm(const Vec& a) { return std::sqrt(sq_norm(a)); }

void axpy(double alpha, const Vec& x, Vec& y) {
  require_same_dim(x, y, "axpy");
  kernels::axpy(alpha, x.span(), y.mutable_span());
}

Vec operator+(const Vec& a, const Vec& b) {
  Vec out = a;
  axpy(1.0, b, out);
  return out;
}

Vec operator-(const Vec& a, const Vec& b) {
  require_same_dim(a, b, "operator-");
  Vec out = a;
  for (std::size_t i = 0; i < out.dim(); ++i) out[i] -= b[i];
  return out;
}

Vec operator*(double c, const Vec& a) {
  Vec out = a;
  for (auto& v : out.mutable_span()) v *= c;
  return out;
}

Vec gaussian(RngStream& rng, std::size_t dim, double sigma) {
  if (!(sigma >= 0.0)) throw ContractViolation("gaussian: sigma must be >= 0");
  Vec out(dim);
  if (sigma == 0.0) return out;
  for (auto& v : out.mutable_span()) v = sigma * rng.normal();
  return out;
}

}  // namespace sgdol
