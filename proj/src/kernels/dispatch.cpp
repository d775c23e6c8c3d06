#include "sgdol/kernels/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

namespace sgdol::kernels {

#ifdef SGDOL_HAVE_AVX2
const KernelTable* avx2_table_unchecked();
#endif

namespace {

bool cpu_has_avx2() {
#if defined(SGDOL_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

const KernelTable* initial_table() {
  const char* env = std::getenv("SGDOL_KERNELS");
  if (env != nullptr && std::string(env) == "scalar") return &scalar_table();
  if (const KernelTable* t = avx2_table()) return t;
  return &scalar_table();
}

std::atomic<const KernelTable*>& current() {
  static std::atomic<const KernelTable*> table{initial_table()};
  return table;
}

}  // namespace

const KernelTable* avx2_table() {
#ifdef SGDOL_HAVE_AVX2
  if (cpu_has_avx2()) return avx2_table_unchecked();
#endif
  return nullptr;
}

const KernelTable& active() { return *current().load(std::memory_order_relaxed); }

bool select(Backend backend) {
  const KernelTable* t = backend == Backend::kScalar ? &scalar_table() : avx2_table();
  if (t == nullptr) return false;
  current().store(t, std::memory_order_relaxed);
  return true;
}

Backend active_backend() {
  return &active() == &scalar_table() ? Backend::kScalar : Backend::kAvx2;
}

std::string_view backend_name(Backend backend) {
  return backend == Backend::kScalar ? "scalar" : "avx2";
}

}  // namespace sgdol::kernels
