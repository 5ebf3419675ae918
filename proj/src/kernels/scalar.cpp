#include <algorithm>

#include "gosperwalk/kernels.hpp"

namespace gosperwalk::kernels {
namespace {

template <class T>
void prefix_min_ref(const T* in, T* out, std::size_t n) {
  if (n == 0) return;
  T run = in[0];
  for (std::size_t k = 0; k < n; ++k) {
    run = std::min(run, in[k]);
    out[k] = run;
  }
}

template <class T>
void suffix_min_ref(const T* in, T* out, std::size_t n) {
  if (n == 0) return;
  T run = in[n - 1];
  for (std::size_t k = n; k-- > 0;) {
    run = std::min(run, in[k]);
    out[k] = run;
  }
}

template <class T>
T excess_sum_ref(const T* values, const T* pmin, const T* smin, std::size_t n) {
  T total{0};
  for (std::size_t k = 0; k < n; ++k) total += values[k] - std::max(pmin[k], smin[k]);
  return total;
}

void detrend_ref(double* values, std::size_t n) {
  if (n < 2) return;
  const double end = values[n - 1];
  const double steps = static_cast<double>(n - 1);
  for (std::size_t k = 0; k < n; ++k) values[k] -= static_cast<double>(k) / steps * end;
}

const KernelTable kScalar{
    "scalar",
    &prefix_min_ref<std::int64_t>,
    &suffix_min_ref<std::int64_t>,
    &excess_sum_ref<std::int64_t>,
    &prefix_min_ref<double>,
    &suffix_min_ref<double>,
    &excess_sum_ref<double>,
    &detrend_ref,
};

}  // namespace

const KernelTable& scalar_kernels() { return kScalar; }

}  // namespace gosperwalk::kernels
