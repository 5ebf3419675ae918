// Compiled with -mavx2; only reached after a runtime CPU check.

#include <immintrin.h>

#include <algorithm>
#include <limits>

#include "gosperwalk/kernels.hpp"

namespace gosperwalk::kernels {
namespace {

constexpr std::int64_t kMaxI64 = std::numeric_limits<std::int64_t>::max();
constexpr double kInf = std::numeric_limits<double>::infinity();

inline __m256i min_epi64(__m256i a, __m256i b) {
  return _mm256_blendv_epi8(a, b, _mm256_cmpgt_epi64(a, b));
}
inline __m256i max_epi64(__m256i a, __m256i b) {
  return _mm256_blendv_epi8(b, a, _mm256_cmpgt_epi64(a, b));
}

// In-register inclusive scans over 4 lanes. "up" runs lane 0 -> 3,
// "down" runs lane 3 -> 0.
inline __m256i scan_min_up(__m256i v) {
  const __m256i top = _mm256_set1_epi64x(kMaxI64);
  __m256i s = _mm256_blend_epi32(_mm256_permute4x64_epi64(v, _MM_SHUFFLE(2, 1, 0, 0)), top, 0x03);
  v = min_epi64(v, s);
  s = _mm256_blend_epi32(_mm256_permute4x64_epi64(v, _MM_SHUFFLE(1, 0, 0, 0)), top, 0x0F);
  return min_epi64(v, s);
}
inline __m256i scan_min_down(__m256i v) {
  const __m256i top = _mm256_set1_epi64x(kMaxI64);
  __m256i s = _mm256_blend_epi32(_mm256_permute4x64_epi64(v, _MM_SHUFFLE(3, 3, 2, 1)), top, 0xC0);
  v = min_epi64(v, s);
  s = _mm256_blend_epi32(_mm256_permute4x64_epi64(v, _MM_SHUFFLE(3, 3, 3, 2)), top, 0xF0);
  return min_epi64(v, s);
}

inline __m256d scan_min_up(__m256d v) {
  const __m256d top = _mm256_set1_pd(kInf);
  __m256d s = _mm256_blend_pd(_mm256_permute4x64_pd(v, _MM_SHUFFLE(2, 1, 0, 0)), top, 0x1);
  v = _mm256_min_pd(v, s);
  s = _mm256_blend_pd(_mm256_permute4x64_pd(v, _MM_SHUFFLE(1, 0, 0, 0)), top, 0x3);
  return _mm256_min_pd(v, s);
}
inline __m256d scan_min_down(__m256d v) {
  const __m256d top = _mm256_set1_pd(kInf);
  __m256d s = _mm256_blend_pd(_mm256_permute4x64_pd(v, _MM_SHUFFLE(3, 3, 2, 1)), top, 0x8);
  v = _mm256_min_pd(v, s);
  s = _mm256_blend_pd(_mm256_permute4x64_pd(v, _MM_SHUFFLE(3, 3, 3, 2)), top, 0xC);
  return _mm256_min_pd(v, s);
}

void prefix_min_i64(const std::int64_t* in, std::int64_t* out, std::size_t n) {
  std::size_t k = 0;
  __m256i carry = _mm256_set1_epi64x(kMaxI64);
  for (; k + 4 <= n; k += 4) {
    __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(in + k));
    v = min_epi64(scan_min_up(v), carry);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + k), v);
    carry = _mm256_permute4x64_epi64(v, _MM_SHUFFLE(3, 3, 3, 3));
  }
  std::int64_t run = _mm256_extract_epi64(carry, 0);
  for (; k < n; ++k) {
    run = std::min(run, in[k]);
    out[k] = run;
  }
}

void suffix_min_i64(const std::int64_t* in, std::int64_t* out, std::size_t n) {
  std::size_t k = n;
  __m256i carry = _mm256_set1_epi64x(kMaxI64);
  for (; k >= 4; k -= 4) {
    __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(in + k - 4));
    v = min_epi64(scan_min_down(v), carry);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + k - 4), v);
    carry = _mm256_permute4x64_epi64(v, _MM_SHUFFLE(0, 0, 0, 0));
  }
  std::int64_t run = _mm256_extract_epi64(carry, 0);
  while (k-- > 0) {
    run = std::min(run, in[k]);
    out[k] = run;
  }
}

std::int64_t excess_sum_i64(const std::int64_t* values, const std::int64_t* pmin,
                            const std::int64_t* smin, std::size_t n) {
  std::size_t k = 0;
  __m256i acc = _mm256_setzero_si256();
  for (; k + 4 <= n; k += 4) {
    const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(values + k));
    const __m256i p = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(pmin + k));
    const __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(smin + k));
    acc = _mm256_add_epi64(acc, _mm256_sub_epi64(v, max_epi64(p, s)));
  }
  alignas(32) std::int64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
  std::int64_t total = lanes[0] + lanes[1] + lanes[2] + lanes[3];
  for (; k < n; ++k) total += values[k] - std::max(pmin[k], smin[k]);
  return total;
}

void prefix_min_f64(const double* in, double* out, std::size_t n) {
  std::size_t k = 0;
  __m256d carry = _mm256_set1_pd(kInf);
  for (; k + 4 <= n; k += 4) {
    __m256d v = _mm256_min_pd(scan_min_up(_mm256_loadu_pd(in + k)), carry);
    _mm256_storeu_pd(out + k, v);
    carry = _mm256_permute4x64_pd(v, _MM_SHUFFLE(3, 3, 3, 3));
  }
  double run = _mm256_cvtsd_f64(carry);
  for (; k < n; ++k) {
    run = std::min(run, in[k]);
    out[k] = run;
  }
}

void suffix_min_f64(const double* in, double* out, std::size_t n) {
  std::size_t k = n;
  __m256d carry = _mm256_set1_pd(kInf);
  for (; k >= 4; k -= 4) {
    __m256d v = _mm256_min_pd(scan_min_down(_mm256_loadu_pd(in + k - 4)), carry);
    _mm256_storeu_pd(out + k - 4, v);
    carry = _mm256_permute4x64_pd(v, _MM_SHUFFLE(0, 0, 0, 0));
  }
  double run = _mm256_cvtsd_f64(carry);
  while (k-- > 0) {
    run = std::min(run, in[k]);
    out[k] = run;
  }
}

double excess_sum_f64(const double* values, const double* pmin, const double* smin,
                      std::size_t n) {
  std::size_t k = 0;
  __m256d acc = _mm256_setzero_pd();
  for (; k + 4 <= n; k += 4) {
    const __m256d top = _mm256_max_pd(_mm256_loadu_pd(pmin + k), _mm256_loadu_pd(smin + k));
    acc = _mm256_add_pd(acc, _mm256_sub_pd(_mm256_loadu_pd(values + k), top));
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, acc);
  double total = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
  for (; k < n; ++k) total += values[k] - std::max(pmin[k], smin[k]);
  return total;
}

void detrend_f64(double* values, std::size_t n) {
  if (n < 2) return;
  const double end = values[n - 1];
  const double steps = static_cast<double>(n - 1);
  const __m256d vend = _mm256_set1_pd(end);
  const __m256d vsteps = _mm256_set1_pd(steps);
  __m256d idx = _mm256_setr_pd(0.0, 1.0, 2.0, 3.0);
  const __m256d four = _mm256_set1_pd(4.0);
  std::size_t k = 0;
  // The last element is the slope source; stop the vector loop before it.
  for (; k + 4 < n; k += 4) {
    const __m256d shift = _mm256_mul_pd(_mm256_div_pd(idx, vsteps), vend);
    _mm256_storeu_pd(values + k, _mm256_sub_pd(_mm256_loadu_pd(values + k), shift));
    idx = _mm256_add_pd(idx, four);
  }
  for (; k < n; ++k) values[k] -= static_cast<double>(k) / steps * end;
}

const KernelTable kAvx2{
    "avx2",         &prefix_min_i64, &suffix_min_i64, &excess_sum_i64,
    &prefix_min_f64, &suffix_min_f64, &excess_sum_f64, &detrend_f64,
};

}  // namespace

namespace detail {
const KernelTable& avx2_table() { return kAvx2; }
}  // namespace detail

}  // namespace gosperwalk::kernels
