#pragma once

#include <cstddef>
#include <span>
#include <string_view>

namespace sgdol::kernels {

// Inner loops shared by every module. Each backend provides the same entry
// points; the element-wise ones (axpy, hadamard_axpy) are bit-identical across
// backends, the reductions (dot) differ only by summation order.
struct KernelTable {
  const char* name;
  double (*dot)(const double* a, const double* b, std::size_t n);
  // y += alpha * x
  void (*axpy)(double alpha, const double* x, double* y, std::size_t n);
  // y -= scale ∘ x  (element-wise)
  void (*hadamard_sub)(const double* scale, const double* x, double* y, std::size_t n);
};

enum class Backend { kScalar, kAvx2 };

const KernelTable& scalar_table();

// nullptr when the binary was built without AVX2 or the CPU lacks it.
const KernelTable* avx2_table();

// Table chosen at first use: AVX2 when available, unless the environment
// variable SGDOL_KERNELS=scalar forces the reference path.
const KernelTable& active();

// Returns false (and leaves the selection untouched) if the backend is
// unavailable on this machine.
bool select(Backend backend);

Backend active_backend();
std::string_view backend_name(Backend backend);

inline double dot(std::span<const double> a, std::span<const double> b) {
  return active().dot(a.data(), b.data(), a.size());
}

inline void axpy(double alpha, std::span<const double> x, std::span<double> y) {
  active().axpy(alpha, x.data(), y.data(), x.size());
}

inline void hadamard_sub(std::span<const double> scale, std::span<const double> x,
                         std::span<double> y) {
  active().hadamard_sub(scale.data(), x.data(), y.data(), x.size());
}

}  // namespace sgdol::kernels
