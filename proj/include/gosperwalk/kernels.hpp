#pragma once

// Data-parallel inner loops shared by the integer walk and the real-valued
// Brownian paths. Every kernel has a scalar reference implementation; SIMD
// variants (AVX2 on x86-64, NEON on aarch64) are selected at runtime.
//
// Min scans and integer reductions are bit-identical across variants.
// Floating-point reductions differ from the scalar reference only by
// summation order.

#include <cstddef>
#include <cstdint>
#include <span>

namespace gosperwalk::kernels {

struct KernelTable {
  const char* name;

  // out[k] = min(in[0..k])
  void (*prefix_min_i64)(const std::int64_t* in, std::int64_t* out, std::size_t n);
  // out[k] = min(in[k..n-1])
  void (*suffix_min_i64)(const std::int64_t* in, std::int64_t* out, std::size_t n);
  // sum_k values[k] - max(pmin[k], smin[k])
  std::int64_t (*excess_sum_i64)(const std::int64_t* values, const std::int64_t* pmin,
                                 const std::int64_t* smin, std::size_t n);

  void (*prefix_min_f64)(const double* in, double* out, std::size_t n);
  void (*suffix_min_f64)(const double* in, double* out, std::size_t n);
  double (*excess_sum_f64)(const double* values, const double* pmin, const double* smin,
                           std::size_t n);
  // values[k] -= (k / (n-1)) * values[n-1], pinning both endpoints to zero
  // when values[0] == 0.
  void (*detrend_f64)(double* values, std::size_t n);
};

const KernelTable& scalar_kernels();

/// SIMD table for this build and CPU, or nullptr when unavailable.
const KernelTable* simd_kernels();

/// Table used by the library. SIMD when available unless the environment
/// variable GOSPERWALK_KERNELS=scalar is set.
const KernelTable& active_kernels();

namespace detail {
#if defined(GOSPERWALK_HAVE_AVX2)
const KernelTable& avx2_table();
#endif
#if defined(GOSPERWALK_HAVE_NEON)
const KernelTable& neon_table();
#endif
}  // namespace detail

// Span wrappers over the active table.

inline void prefix_min(std::span<const std::int64_t> in, std::span<std::int64_t> out,
                       const KernelTable& k = active_kernels()) {
  k.prefix_min_i64(in.data(), out.data(), in.size());
}
inline void suffix_min(std::span<const std::int64_t> in, std::span<std::int64_t> out,
                       const KernelTable& k = active_kernels()) {
  k.suffix_min_i64(in.data(), out.data(), in.size());
}
inline void prefix_min(std::span<const double> in, std::span<double> out,
                       const KernelTable& k = active_kernels()) {
  k.prefix_min_f64(in.data(), out.data(), in.size());
}
inline void suffix_min(std::span<const double> in, std::span<double> out,
                       const KernelTable& k = active_kernels()) {
  k.suffix_min_f64(in.data(), out.data(), in.size());
}

}  // namespace gosperwalk::kernels
