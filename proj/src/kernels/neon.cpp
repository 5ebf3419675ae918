// aarch64 only; NEON is part of the baseline ISA there.

#include <arm_neon.h>

#include <algorithm>
#include <limits>

#include "gosperwalk/kernels.hpp"

namespace gosperwalk::kernels {
namespace {

constexpr std::int64_t kMaxI64 = std::numeric_limits<std::int64_t>::max();
constexpr double kInf = std::numeric_limits<double>::infinity();

inline int64x2_t min_s64(int64x2_t a, int64x2_t b) { return vbslq_s64(vcgtq_s64(a, b), b, a); }
inline int64x2_t max_s64(int64x2_t a, int64x2_t b) { return vbslq_s64(vcgtq_s64(a, b), a, b); }

void prefix_min_i64(const std::int64_t* in, std::int64_t* out, std::size_t n) {
  std::size_t k = 0;
  int64x2_t carry = vdupq_n_s64(kMaxI64);
  for (; k + 2 <= n; k += 2) {
    int64x2_t v = vld1q_s64(in + k);
    v = min_s64(v, vextq_s64(vdupq_n_s64(kMaxI64), v, 1));
    v = min_s64(v, carry);
    vst1q_s64(out + k, v);
    carry = vdupq_laneq_s64(v, 1);
  }
  std::int64_t run = vgetq_lane_s64(carry, 0);
  for (; k < n; ++k) {
    run = std::min(run, in[k]);
    out[k] = run;
  }
}

void suffix_min_i64(const std::int64_t* in, std::int64_t* out, std::size_t n) {
  std::size_t k = n;
  int64x2_t carry = vdupq_n_s64(kMaxI64);
  for (; k >= 2; k -= 2) {
    int64x2_t v = vld1q_s64(in + k - 2);
    v = min_s64(v, vextq_s64(v, vdupq_n_s64(kMaxI64), 1));
    v = min_s64(v, carry);
    vst1q_s64(out + k - 2, v);
    carry = vdupq_laneq_s64(v, 0);
  }
  std::int64_t run = vgetq_lane_s64(carry, 0);
  while (k-- > 0) {
    run = std::min(run, in[k]);
    out[k] = run;
  }
}

std::int64_t excess_sum_i64(const std::int64_t* values, const std::int64_t* pmin,
                            const std::int64_t* smin, std::size_t n) {
  std::size_t k = 0;
  int64x2_t acc = vdupq_n_s64(0);
  for (; k + 2 <= n; k += 2) {
    const int64x2_t top = max_s64(vld1q_s64(pmin + k), vld1q_s64(smin + k));
    acc = vaddq_s64(acc, vsubq_s64(vld1q_s64(values + k), top));
  }
  std::int64_t total = vgetq_lane_s64(acc, 0) + vgetq_lane_s64(acc, 1);
  for (; k < n; ++k) total += values[k] - std::max(pmin[k], smin[k]);
  return total;
}

void prefix_min_f64(const double* in, double* out, std::size_t n) {
  std::size_t k = 0;
  float64x2_t carry = vdupq_n_f64(kInf);
  for (; k + 2 <= n; k += 2) {
    float64x2_t v = vld1q_f64(in + k);
    v = vminq_f64(v, vextq_f64(vdupq_n_f64(kInf), v, 1));
    v = vminq_f64(v, carry);
    vst1q_f64(out + k, v);
    carry = vdupq_laneq_f64(v, 1);
  }
  double run = vgetq_lane_f64(carry, 0);
  for (; k < n; ++k) {
    run = std::min(run, in[k]);
    out[k] = run;
  }
}

void suffix_min_f64(const double* in, double* out, std::size_t n) {
  std::size_t k = n;
  float64x2_t carry = vdupq_n_f64(kInf);
  for (; k >= 2; k -= 2) {
    float64x2_t v = vld1q_f64(in + k - 2);
    v = vminq_f64(v, vextq_f64(v, vdupq_n_f64(kInf), 1));
    v = vminq_f64(v, carry);
    vst1q_f64(out + k - 2, v);
    carry = vdupq_laneq_f64(v, 0);
  }
  double run = vgetq_lane_f64(carry, 0);
  while (k-- > 0) {
    run = std::min(run, in[k]);
    out[k] = run;
  }
}

double excess_sum_f64(const double* values, const double* pmin, const double* smin,
                      std::size_t n) {
  std::size_t k = 0;
  float64x2_t acc = vdupq_n_f64(0.0);
  for (; k + 2 <= n; k += 2) {
    const float64x2_t top = vmaxq_f64(vld1q_f64(pmin + k), vld1q_f64(smin + k));
    acc = vaddq_f64(acc, vsubq_f64(vld1q_f64(values + k), top));
  }
  double total = vgetq_lane_f64(acc, 0) + vgetq_lane_f64(acc, 1);
  for (; k < n; ++k) total += values[k] - std::max(pmin[k], smin[k]);
  return total;
}

void detrend_f64(double* values, std::size_t n) {
  if (n < 2) return;
  const double end = values[n - 1];
  const double steps = static_cast<double>(n - 1);
  const float64x2_t vend = vdupq_n_f64(end);
  const float64x2_t vsteps = vdupq_n_f64(steps);
  float64x2_t idx = {0.0, 1.0};
  const float64x2_t two = vdupq_n_f64(2.0);
  std::size_t k = 0;
  for (; k + 2 < n; k += 2) {
    const float64x2_t shift = vmulq_f64(vdivq_f64(idx, vsteps), vend);
    vst1q_f64(values + k, vsubq_f64(vld1q_f64(values + k), shift));
    idx = vaddq_f64(idx, two);
  }
  for (; k < n; ++k) values[k] -= static_cast<double>(k) / steps * end;
}

const KernelTable kNeon{
    "neon",          &prefix_min_i64, &suffix_min_i64, &excess_sum_i64,
    &prefix_min_f64, &suffix_min_f64, &excess_sum_f64, &detrend_f64,
};

}  // namespace

namespace detail {
const KernelTable& neon_table() { return kNeon; }
}  // namespace detail

}  // namespace gosperwalk::kernels
