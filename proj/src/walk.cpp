#include "gosperwalk/walk.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <stdexcept>

#include "gosperwalk/errors.hpp"
#include "gosperwalk/kernels.hpp"

namespace gosperwalk {

std::vector<Count> partial_sums(const RootConfig& config) {
  const std::size_t m = config.m();
  std::vector<Count> S(m + 1, 0);
  for (std::size_t k = 1; k <= m; ++k) S[k] = S[k - 1] + (config.red_at(k) - config.blue_at(k));
  return S;
}

WalkStats compute_walk(const RootConfig& config) {
  config.validate();
  const std::size_t m = config.m();

  WalkStats w;
  w.S = partial_sums(config);

  w.M.resize(m + 1);
  w.M[0] = w.S[0];
  for (std::size_t k = 1; k <= m; ++k) w.M[k] = std::min(w.M[k - 1], w.S[k]);

  w.Mtilde.resize(m + 1);
  w.Mtilde[m] = w.S[m];
  for (std::size_t k = m; k-- > 0;) w.Mtilde[k] = std::min(w.Mtilde[k + 1], w.S[k]);

  // First attainment of the global minimum.
  w.tau = 0;
  for (std::size_t k = 1; k <= m; ++k) {
    if (w.S[k] < w.S[w.tau]) w.tau = k;
  }

  w.Y.resize(m + 1);
  w.Ytilde.resize(m + 1);
  w.I.assign(m + 1, 0);
  for (std::size_t k = 0; k <= m; ++k) {
    w.Y[k] = w.S[k] - w.M[k];
    w.Ytilde[k] = w.S[k] - w.Mtilde[k];
  }

  Count beta = 0;
  for (std::size_t j = 1; j + 1 <= m; ++j) {
    w.I[j] = j <= w.tau ? w.Y[j] : w.Ytilde[j];
    if (__builtin_add_overflow(beta, w.I[j], &beta))
      throw std::overflow_error("beta exceeds the 64-bit range");
  }
  w.beta = beta;
  return w;
}

// On either side of tau one of the two minima equals the global minimum, so
// I_j = S_j - max(M_j, Mtilde_j) and no splice point is needed.
Count walk_beta(const RootConfig& config) {
  config.validate();
  const std::size_t m = config.m();
  if (m < 2) return 0;

  // Every |I_j| is bounded by the total ball count, so m * total bounds beta.
  const Count balls = config.total_red() + config.total_blue();
  const auto bound = static_cast<long double>(balls) * static_cast<long double>(m);
  if (bound >= static_cast<long double>(std::numeric_limits<Count>::max() / 2))
    return compute_walk(config).beta;

  const std::vector<Count> S = partial_sums(config);
  std::vector<Count> pmin(m + 1), smin(m + 1);
  const auto& k = kernels::active_kernels();
  kernels::prefix_min(S, pmin, k);
  kernels::suffix_min(S, smin, k);
  return k.excess_sum_i64(S.data() + 1, pmin.data() + 1, smin.data() + 1, m - 1);
}

}  // namespace gosperwalk
