#include <cstdlib>
#include <string_view>

#include "gosperwalk/kernels.hpp"

namespace gosperwalk::kernels {

const KernelTable* simd_kernels() {
#if defined(GOSPERWALK_HAVE_AVX2)
  static const bool has_avx2 = __builtin_cpu_supports("avx2");
  return has_avx2 ? &detail::avx2_table() : nullptr;
#elif defined(GOSPERWALK_HAVE_NEON)
  return &detail::neon_table();
#else
  return nullptr;
#endif
}

const KernelTable& active_kernels() {
  static const KernelTable* chosen = [] {
    const char* env = std::getenv("GOSPERWALK_KERNELS");
    if (env != nullptr && std::string_view(env) == "scalar") return &scalar_kernels();
    const KernelTable* simd = simd_kernels();
    return simd != nullptr ? simd : &scalar_kernels();
  }();
  return *chosen;
}

}  // namespace gosperwalk::kernels
