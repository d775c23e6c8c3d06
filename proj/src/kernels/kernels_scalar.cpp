#include "sgdol/kernels/kernels.hpp"

namespace sgdol::kernels {
namespace {

double dot_scalar(const double* a, const double* b, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += a[i] * b[i];
  return acc;
}

void axpy_scalar(double alpha, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

void hadamard_sub_scalar(const double* scale, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] -= scale[i] * x[i];
}

constexpr KernelTable kScalar{"scalar", dot_scalar, axpy_scalar, hadamard_sub_scalar};

}  // namespace

const KernelTable& scalar_table() { return kScalar; }

}  // namespace sgdol::kernels
