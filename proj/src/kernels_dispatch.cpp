#include <cstdlib>
#include <cstring>

#include "scf/kernels.hpp"

namespace scf::kernels {

#if defined(SCF_HAVE_AVX2_KERNELS)
const KernelTable& avx2_table();
#endif

const KernelTable* avx2() {
#if defined(SCF_HAVE_AVX2_KERNELS)
  static const bool supported = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
  return supported ? &avx2_table() : nullptr;
#else
  return nullptr;
#endif
}

const KernelTable& active() {
  static const KernelTable* chosen = [] {
    const char* env = std::getenv("SCF_KERNELS");
    if (env != nullptr && std::strcmp(env, "scalar") == 0) return &scalar();
    const KernelTable* v = avx2();
    return v != nullptr ? v : &scalar();
  }();
  return *chosen;
}

}  // namespace scf::kernels
